#include "bolpq/report.hpp"

#include <cstdio>
#include <sstream>

#include "bolpq/errors.hpp"

namespace bolpq {

namespace {

const char* upto_name(Upto u) { return u == Upto::Isomorphism ? "isomorphism" : "isotopism"; }

std::string theta_text(const ThetaVector& theta) {
  std::string s = "(";
  for (std::size_t i = 0; i < theta.thetas.size(); ++i) {
    if (i > 0) s += ", ";
    s += to_string(theta.thetas[i]);
  }
  return s + ")";
}

std::string flags_text(const LoopClass& c) {
  std::string s;
  const auto add = [&s](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(c.is_cyclic, "cyclic");
  add(c.is_group, "group");
  add(c.is_commutative, "commutative");
  add(c.is_bruck, "bruck");
  return s.empty() ? "-" : s;
}

}  // namespace

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "Bol loops of order " << r.p * r.q << " = " << r.p << " * " << r.q << " up to " << upto_name(r.upto)
     << "\n";
  os << "t = " << r.t << " (w = sqrt(t)), omega = " << (r.omega ? to_string(*r.omega) : "none") << ", branch "
     << to_string(r.branch) << "\n";
  os << "gamma values depend on the choice of omega; the counts do not\n";
  os << "isomorphism classes: " << r.isomorphism_count << "\n";
  os << "isotopism classes: " << r.isotopism_count << "\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const LoopClass& c = r.classes[i];
    os << "[" << i << "] ";
    if (c.representative) {
      os << "gamma = " << to_string(*c.representative) << ", orbit size " << c.orbit_size();
    } else {
      os << "cyclic group";
    }
    os << ", flags " << flags_text(c) << (c.table_checked ? " (table)" : " (sequence)") << "\n";
    os << "    theta = " << theta_text(c.theta) << "\n";
    if (c.orbit_size() > 1) {
      os << "    orbit = {";
      for (std::size_t k = 0; k < c.orbit.size(); ++k) os << (k ? ", " : "") << to_string(c.orbit[k]);
      os << "}\n";
    }
  }
  return os.str();
}

nlohmann::json report_to_json(const ClassificationReport& r) {
  using nlohmann::json;
  json classes = json::array();
  for (const LoopClass& c : r.classes) {
    json orbit = json::array();
    for (const auto& g : c.orbit) orbit.push_back(to_string(g));
    json theta = json::array();
    for (const auto& th : c.theta.thetas) theta.push_back(to_string(th));
    classes.push_back({
        {"representative", c.representative ? json(to_string(*c.representative)) : json(nullptr)},
        {"orbit", orbit},
        {"orbit_size", c.orbit_size()},
        {"theta", theta},
        {"flags",
         {{"is_cyclic", c.is_cyclic},
          {"is_group", c.is_group},
          {"is_commutative", c.is_commutative},
          {"is_bruck", c.is_bruck},
          {"source", c.table_checked ? "table" : "sequence"}}},
    });
  }
  return json{
      {"p", r.p},
      {"q", r.q},
      {"order", r.p * r.q},
      {"t", r.t},
      {"omega", r.omega ? json{{"re", r.omega->re}, {"im", r.omega->im}} : json(nullptr)},
      {"branch", to_string(r.branch)},
      {"gamma_format", "a+b*w with w = sqrt(t)"},
      {"upto", upto_name(r.upto)},
      {"counts", {{"isomorphism", r.isomorphism_count}, {"isotopism", r.isotopism_count}}},
      {"classes", classes},
      {"note", "gamma representatives depend on the choice of omega; counts do not"},
  };
}

std::string count_rows_to_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "p,iso_count,isotop_count,remark_formula,nr_lower_bound,difference\n";
  for (const auto& row : rows) {
    os << row.p << ',' << row.iso_count << ',' << row.isotop_count << ',' << row.remark_formula << ',';
    if (row.nr_lower_bound) os << *row.nr_lower_bound;
    os << ',';
    if (row.difference) os << *row.difference;
    os << '\n';
  }
  return os.str();
}

std::string count_rows_to_text(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "     p   iso  isotopy  formula  lower  diff\n";
  for (const auto& row : rows) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%6llu %5llu %8llu %8llu", static_cast<unsigned long long>(row.p),
                  static_cast<unsigned long long>(row.iso_count),
                  static_cast<unsigned long long>(row.isotop_count),
                  static_cast<unsigned long long>(row.remark_formula));
    os << buf;
    if (row.nr_lower_bound) {
      std::snprintf(buf, sizeof buf, " %6llu %5lld", static_cast<unsigned long long>(*row.nr_lower_bound),
                    static_cast<long long>(*row.difference));
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

std::string summary_to_text(const VerificationSummary& s) {
  std::ostringstream os;
  const auto rep = [&](std::size_t i) {
    return s.representatives[i] ? "gamma=" + to_string(*s.representatives[i]) : std::string("cyclic");
  };
  const auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "1" : "0") : "-"; };
  os << "cross-verification for p = " << s.p << ", q = " << s.q << "\n";
  for (const auto& note : s.notes) os << "note: " << note << "\n";
  os << "isomorphism representatives: " << s.representatives.size() << "\n";
  os << "pair                         iso(orbit,seq,table) isotopy(orbit,seq,table)\n";
  for (const auto& pc : s.pairs) {
    os << rep(pc.i) << " ~ " << rep(pc.j) << ": " << pc.orbit_same_iso << pc.sequence_same_iso
       << tri(pc.table_same_iso) << " " << pc.orbit_same_isotopy << pc.sequence_same_isotopy
       << tri(pc.table_same_isotopy) << (pc.agrees() ? "" : "  DISAGREE") << "\n";
  }
  os << "isotopism classes: orbit " << s.orbit_isotopy_classes << ", sequence " << s.sequence_isotopy_classes
     << ", table " << (s.table_isotopy_classes ? std::to_string(*s.table_isotopy_classes) : "skipped")
     << "\n";
  os << (s.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Fp2Element parse_gamma(const std::string& text, const Fp2Field& field) {
  const auto parse_int = [&](const std::string& part) -> std::int64_t {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw InvalidInput("malformed gamma '" + text + "'");
    return v;
  };
  const auto comma = text.find(',');
  const Fp2Element re = field.from_int(parse_int(text.substr(0, comma)));
  const Fp2Element im =
      comma == std::string::npos ? field.zero() : field.from_int(parse_int(text.substr(comma + 1)));
  return {re.re, im.re};
}

}  // namespace bolpq
