#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "strata/algebra.hpp"
#include "strata/hyperelliptic.hpp"
#include "strata/integrals.hpp"
#include "strata/trees.hpp"
#include "strata/verify.hpp"

namespace strata {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string readable(const std::string& key) {
  // term_line prints "c | record | psi=... | kappa=..."; drop the coefficient
  std::string s = term_line(key, 1);
  auto bar = s.find("| ");
  return bar == std::string::npos ? s : s.substr(bar + 2);
}

std::string witness_text(const Verdict& v) {
  if (!v.witness) return "verdict=" + status_name(v.status);
  return "verdict=" + status_name(v.status) + " witness=\"" + readable(v.witness->generator) +
         "\" lhs=" + to_string(v.witness->lhs) + " rhs=" + to_string(v.witness->rhs);
}

class Builder {
 public:
  Builder(std::string suite, const SuiteOptions& opt) : suite_(std::move(suite)), opt_(opt) {}

  void add(const std::string& id, bool pass, double seconds, std::string detail = "") {
    ReportLine l{suite_, id, pass, seconds, std::move(detail)};
    if (opt_.on_line) opt_.on_line(l);
    report_.lines.push_back(std::move(l));
  }
  // Runs f, which returns (pass, detail); exceptions become failures.
  template <class F>
  void run(const std::string& id, F f) {
    auto t0 = Clock::now();
    try {
      auto [pass, detail] = f();
      add(id, pass, since(t0), detail);
    } catch (const std::exception& e) {
      add(id, false, since(t0), std::string("error=\"") + e.what() + "\"");
    }
  }
  void verdict(const std::string& id, const std::function<Verdict()>& f) {
    run(id, [&] {
      Verdict v = f();
      return std::make_pair(v.equal(), witness_text(v));
    });
  }
  Report take() { return std::move(report_); }

 private:
  std::string suite_;
  const SuiteOptions& opt_;
  Report report_;
};

// sum over the trees of xi_T*( prod_v 1/(psi_{h(v)} - 1) ), every degree
TautClass tree_psi_sum(const std::vector<RootedTree>& trees) {
  if (trees.empty()) throw std::invalid_argument("tree_psi_sum: no trees");
  const int n = trees.front().n;
  TautClass out(0, n + 1);
  for (const auto& t : trees) {
    TreeGraph tg = tree_graph(t);
    const Graph& g = tg.graph;
    const int V = g.num_vertices();
    DecGraph d = DecGraph::bare(g);
    Rational sign = V % 2 ? -1 : 1;
    std::function<void(int)> rec = [&](int v) {
      if (v == V) {
        out.add(d, sign);
        return;
      }
      for (int k = 0; k <= g.vertex_dim(v); ++k) {
        d.dec.psi[tg.h[v]] = k;
        rec(v + 1);
      }
      d.dec.psi[tg.h[v]] = 0;
    };
    rec(0);
  }
  return out;
}

int sign_of_edges(const RootedTree& t) { return t.num_edges() % 2 ? -1 : 1; }

std::string tree_list(const std::vector<RootedTree>& trees) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) os << ';';
    for (std::size_t c = 0; c < trees[i].clades.size(); ++c) os << (c ? "," : "") << trees[i].clades[c];
  }
  return os.str();
}

std::vector<int> swap_perm(int n, int a, int b) {
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  std::swap(p[a], p[b]);
  return p;
}

}  // namespace

Report suite_trees(const SuiteOptions& opt) {
  Builder b("trees", opt);
  for (int n = 2; n <= 8; ++n)
    b.run("chi-n" + std::to_string(n), [&] {
      Rational s = 0;
      for (const auto& t : rooted_trees(n)) s += sign_of_edges(t);
      Rational expect = factorial(n - 1) * (n % 2 ? -1 : 1);
      return std::make_pair(s == expect, "sum=" + to_string(s) + " expected=" + to_string(expect));
    });
  for (int n = 3; n <= 8; ++n)
    b.run("gne-n" + std::to_string(n), [&] {
      Rational s = 0;
      for (const auto& t : rooted_trees_ne(n)) s += sign_of_edges(t);
      return std::make_pair(s == 0, "sum=" + to_string(s));
    });
  for (int n = 3; n <= 6; ++n)
    b.run("euler-n" + std::to_string(n), [&] {
      Rational total = 0;
      std::vector<RootedTree> bad;
      for (const auto& t : rooted_trees_ne(n)) {
        Rational v = integrate(tree_psi_sum({t}));
        if (v != -sign_of_edges(t)) bad.push_back(t);
        total += v;
      }
      std::string detail = "integral=" + to_string(total);
      if (!bad.empty()) detail += " trees=" + tree_list(bad);
      return std::make_pair(total == 0 && bad.empty(), detail);
    });
  for (int n = 3; n <= 5; ++n)
    b.verdict("pullback-n" + std::to_string(n), [&] {
      // trees on M_{0,n} have root n; after pulling back, the root moves to n+1
      TautClass lhs = relabel(pullback_forget(tree_psi_sum(rooted_trees(n - 1))), swap_perm(n + 1, n, n + 1));
      return numerical_equal(lhs, tree_psi_sum(rooted_trees_ne(n)), opt.jobs);
    });
  for (int n = 3; n <= 5; ++n)
    b.verdict("eulergen-n" + std::to_string(n), [&] {
      TautClass rhs(0, n + 1);
      for (const auto& t : b_family(n)) {
        TreeGraph tg = tree_graph(t);
        rhs.add(DecGraph::bare(tg.graph), tg.graph.num_vertices() % 2 ? -1 : 1);
      }
      return numerical_equal(tree_psi_sum(rooted_trees_ne(n)), rhs, opt.jobs);
    });
  return b.take();
}

Report suite_pixton(const SuiteOptions& opt) {
  Builder b("pixton", opt);
  struct Choice {
    Rational a, c, bb;
  };
  const std::vector<Choice> choices{{3, -1, 1}, {1, 0, 0}, {Rational(1, 2), 2, -1}};
  const std::vector<std::pair<int, int>> spaces{{1, 1}, {1, 2}, {2, 1}};
  for (auto [g, n] : spaces) {
    for (std::size_t ci = 0; ci < choices.size(); ++ci) {
      const auto& ch = choices[ci];
      std::vector<Rational> a(n, ch.a);
      // a second marking gets its own coefficient so that a_i really varies
      if (n > 1) a[1] = ch.a + 1;
      const int top = std::min(3, 3 * g - 3 + n);
      TautClass d = ch.c * lambda_class(g, n) - ch.bb * delta_total(g, n);
      for (int i = 1; i <= n; ++i) d += a[i - 1] * psi_class(g, n, i);
      TautClass ex = pixton_exponential(g, n, a, ch.c, ch.bb, top);
      TautClass pw = TautClass::fundamental(g, n);
      for (int k = 1; k <= top; ++k) {
        pw = multiply(pw, d);
        std::string id = "exp-g" + std::to_string(g) + "n" + std::to_string(n) + "-c" + std::to_string(ci) +
                         "-k" + std::to_string(k);
        b.run(id, [&] {
          TautClass lhs = factorial(k) * ex.degree_part(k);
          if (lhs == pw) return std::make_pair(true, std::string("terms=equal"));
          // same class, different representative: fall back to pairings
          Verdict v = numerical_equal(lhs, pw, opt.jobs);
          return std::make_pair(v.equal(), "terms=differ " + witness_text(v));
        });
      }
    }
  }
  return b.take();
}

Report suite_hyp(const SuiteOptions& opt) {
  Builder b("hyp", opt);
  const int max_n = std::min(opt.max_n, opt.experimental_tilde ? 6 : 4);
  b.run("ct-n1-seed", [&] {
    TautClass expect = Rational(3) * psi_class(2, 1, 1) - lambda_class(2, 1) - delta_1(2, 1);
    bool ok = hyp_ct_formula(1) == expect;
    return std::make_pair(ok, std::string(ok ? "terms=equal" : "terms=differ"));
  });
  b.verdict("prod-ct-g2n2", [&] {
    auto f = [](int i) { return Rational(3) * omega_class(2, 2, i) - lambda_class(2, 2) - delta_nrt(2, 2); };
    return numerical_equal_ct(prod_formula(2, 2, 3, -1, 1), multiply(f(1), f(2)), opt.jobs);
  });
  for (int n = 2; n <= max_n; ++n) {
    b.verdict("tilde-vs-rec-n" + std::to_string(n), [&] {
      return numerical_equal(hyp_tilde_formula(n, opt.experimental_tilde), hyp_recursive(n), opt.jobs);
    });
  }
  for (int n = 2; n <= max_n; ++n)
    b.verdict("push-rec-n" + std::to_string(n), [&] {
      return numerical_equal(pushforward_forget(hyp_recursive(n)), Rational(7 - n) * hyp_recursive(n - 1),
                             opt.jobs);
    });
  for (int n = 3; n <= std::min(max_n + 1, 5); ++n)
    b.verdict("push-phigamma-n" + std::to_string(n), [&] {
      // forget marking n-1: move it to the end first
      TautClass moved = relabel(phigamma(n), swap_perm(n, n - 1, n));
      return numerical_equal(pushforward_forget(moved), Rational(8 - n) * phigamma(n - 1), opt.jobs);
    });
  for (int n = 2; n <= max_n; ++n) {
    // pairings of the class against the generators once; a transposition
    // permutes the generators instead of the class
    const TautClass h = hyp_recursive(n);
    const int cd = h.dim() - n;
    std::vector<std::string> keys;
    std::vector<Rational> vals;
    std::map<std::string, std::size_t> index;
    bool prepared = false;
    auto prepare = [&] {
      if (prepared) return;
      keys = generator_keys(2, n, cd);
      vals = pairing_vector(h, keys, opt.jobs);
      for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;
      prepared = true;
    };
    for (int i = 1; i < n; ++i)
      b.run("symmetry-n" + std::to_string(n) + "-t" + std::to_string(i) + std::to_string(i + 1), [&] {
        prepare();
        auto perm = swap_perm(n, i, i + 1);
        for (std::size_t k = 0; k < keys.size(); ++k) {
          DecGraph d = decode_key(keys[k]);
          d.graph = relabel(d.graph, perm);
          std::size_t j = index.at(canonical_key(d));
          if (vals[j] != vals[k])
            return std::make_pair(false, "witness=\"" + readable(keys[k]) + "\" lhs=" + to_string(vals[j]) +
                                             " rhs=" + to_string(vals[k]));
        }
        return std::make_pair(true, "generators=" + std::to_string(keys.size()));
      });
  }
  return b.take();
}

Report suite_nct(const SuiteOptions& opt) {
  Builder b("nct", opt);
  for (int n = 2; n <= std::min(opt.max_n, 4); ++n)
    b.verdict("closed-vs-rec-n" + std::to_string(n),
              [&] { return numerical_equal(nct_closed(n), nct_recursive(n), opt.jobs); });
  if (opt.max_n >= 5) {
    auto tail = nct5_tail();
    auto spots = nct5_spot_classes();
    for (std::size_t k = 0; k < spots.size(); ++k)
      b.run("n5-spot" + std::to_string(k + 1), [&] {
        Rational v = pair(tail, spots[k]);
        return std::make_pair(v == 0, "pairing=" + to_string(v));
      });
  }
  return b.take();
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "trees") return suite_trees(opt);
  if (name == "pixton") return suite_pixton(opt);
  if (name == "hyp") return suite_hyp(opt);
  if (name == "nct") return suite_nct(opt);
  if (name == "all") {
    Report all;
    for (const char* s : {"trees", "pixton", "hyp", "nct"}) {
      Report r = run_suite(s, opt);
      for (auto& l : r.lines) all.lines.push_back(std::move(l));
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace strata
