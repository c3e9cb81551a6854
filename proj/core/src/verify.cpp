#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strata/integrals.hpp"
#include "strata/verify.hpp"

namespace strata {

std::string status_name(Status s) {
  switch (s) {
    case Status::EqualDefinitive:
      return "EQUAL_DEFINITIVE";
    case Status::NumericallyEquivalent:
      return "NUMERICALLY_EQUIVALENT";
    case Status::Distinct:
      return "DISTINCT";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

std::size_t first_nonzero_pairing(const TautClass& x, const std::vector<std::string>& keys, int jobs,
                                  Rational* value) {
  // blocks keep the early exit while still handing each thread some work
  const std::size_t block = 64 * static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < keys.size(); start += block) {
    std::vector<std::string> chunk(keys.begin() + start, keys.begin() + std::min(keys.size(), start + block));
    auto vals = pairing_vector(x, chunk, jobs);
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] != 0) {
        if (value) *value = vals[i];
        return start + i;
      }
  }
  return keys.size();
}

namespace {

bool compact_type_key(const std::string& key) { return decode_key(key).graph.h1() == 0; }

Verdict compare(const TautClass& a, const TautClass& b, int jobs, bool ct_only) {
  if (a.g() != b.g() || a.n() != b.n()) throw std::invalid_argument("numerical_equal: ambient mismatch");
  auto da = a.degrees(), db = b.degrees();
  if (da.size() == 1 && db.size() == 1 && *da.begin() != *db.begin())
    throw std::invalid_argument("numerical_equal: degree mismatch");
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.status = a.g() == 0 ? Status::EqualDefinitive : Status::NumericallyEquivalent;
  TautClass diff = a - b;
  if (ct_only) diff = diff.restrict_compact_type();
  for (int d : diff.degrees()) {
    TautClass part = diff.degree_part(d);
    auto keys = generator_keys(a.g(), a.n(), a.dim() - d);
    if (ct_only) {
      std::vector<std::string> kept;
      for (auto& k : keys)
        if (compact_type_key(k)) kept.push_back(std::move(k));
      keys = std::move(kept);
    }
    std::size_t hit = first_nonzero_pairing(part, keys, jobs);
    v.generators += std::min(hit + 1, keys.size());
    if (hit < keys.size()) {
      TautClass gen = TautClass::stratum(decode_key(keys[hit]));
      v.status = Status::Distinct;
      v.witness = Witness{keys[hit], pair(a.degree_part(d), gen), pair(b.degree_part(d), gen)};
      break;
    }
  }
  if (ct_only && v.status == Status::EqualDefinitive) v.status = Status::NumericallyEquivalent;
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace

Verdict numerical_equal(const TautClass& a, const TautClass& b, int jobs) { return compare(a, b, jobs, false); }

Verdict numerical_equal_ct(const TautClass& a, const TautClass& b, int jobs) {
  return compare(a, b, jobs, true);
}

std::string ReportLine::format() const {
  std::ostringstream os;
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", seconds);
  os << "V " << suite << '/' << id << ' ' << (pass ? "PASS" : "FAIL") << " t=" << t;
  if (!detail.empty()) os << ' ' << detail;
  return os.str();
}

bool Report::ok() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

std::string Report::summary() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& l : lines) {
    os << l.suite << '/' << l.id << ' ' << (l.pass ? "PASS" : "FAIL") << '\n';
    passed += l.pass;
  }
  os << "total " << passed << '/' << lines.size() << '\n';
  return os.str();
}

}  // namespace strata
