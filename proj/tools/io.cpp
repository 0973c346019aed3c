#include "io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace hgc::io {

using nlohmann::ordered_json;

namespace {

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

void csv_vec(std::ostream& os, const Vec& v) {
  for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << int(v[i]);
}

std::string big(const BigInt& x) { return to_string(x); }

// Large counts are written as JSON numbers when they fit, strings otherwise.
ordered_json big_json(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  return to_string(x);
}

void header(std::ostream& os, const Field& f, int m) {
  os << "# m=" << m << " p=" << f.p() << " e=" << f.e() << "\n";
}

}  // namespace

FormFile read_form(std::istream& is) {
  ordered_json j;
  try {
    j = ordered_json::parse(is);
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("form file is not valid JSON: ") + ex.what());
  }
  FormFile f;
  try {
    f.m = j.at("m").get<int>();
    f.p = j.at("p").get<int>();
    f.e = j.at("e").get<int>();
    for (const auto& x : j.at("upper")) {
      const int v = x.get<int>();
      if (v < 0 || v > 255) throw FormatError("form entry out of range: " + std::to_string(v));
      f.upper.push_back(static_cast<Elem>(v));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed form file: ") + ex.what());
  }
  if (f.m < 2) throw FormatError("form file: m must be at least 2");
  if (static_cast<int>(f.upper.size()) != pair_count(f.m))
    throw FormatError("form file: expected " + std::to_string(pair_count(f.m)) + " upper entries, got " +
                      std::to_string(f.upper.size()));
  const Field field = [&] {
    try {
      return Field::make(f.p, f.e);
    } catch (const std::exception& ex) {
      throw FormatError(std::string("form file: ") + ex.what());
    }
  }();
  for (Elem x : f.upper)
    if (x >= field.q2()) throw FormatError("form file: entry " + std::to_string(x) + " is not in GF(q^2)");
  return f;
}

FormFile read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open form file " + path);
  return read_form(in);
}

void write_form(std::ostream& os, const FormFile& f) {
  ordered_json j;
  j["m"] = f.m;
  j["p"] = f.p;
  j["e"] = f.e;
  j["upper"] = f.upper;
  os << j.dump() << "\n";
}

void write_points(std::ostream& os, const Field& f, int m, std::span<const ProjectivePoint> pts, Format fmt) {
  if (fmt == Format::json) {
    ordered_json j{{"m", m}, {"p", f.p()}, {"e", f.e()}, {"points", ordered_json::array()}};
    for (const auto& p : pts) j["points"].push_back(vec_json(p.coords));
    os << j.dump() << "\n";
    return;
  }
  header(os, f, m);
  for (int i = 0; i < m; ++i) os << (i ? "," : "") << "x" << i;
  os << "\n";
  for (const auto& p : pts) {
    csv_vec(os, p.coords);
    os << "\n";
  }
}

void write_lines(std::ostream& os, const Field& f, int m, std::span<const IsotropicLine> lines, Format fmt) {
  if (fmt == Format::json) {
    ordered_json j{{"m", m}, {"p", f.p()}, {"e", f.e()}, {"lines", ordered_json::array()}};
    for (const auto& l : lines) j["lines"].push_back(ordered_json::array({vec_json(l.v), vec_json(l.w)}));
    os << j.dump() << "\n";
    return;
  }
  header(os, f, m);
  for (int i = 0; i < m; ++i) os << "v" << i << ",";
  for (int i = 0; i < m; ++i) os << (i ? "," : "") << "w" << i;
  os << "\n";
  for (const auto& l : lines) {
    csv_vec(os, l.v);
    os << ",";
    csv_vec(os, l.w);
    os << "\n";
  }
}

void write_genmat(std::ostream& os, const ProjectiveSystem& sys) {
  const Field& f = sys.field();
  os << sys.m() << " " << f.p() << " " << f.e() << " " << sys.n() << " " << sys.k() << "\n";
  std::string row;
  for (int r = 0; r < sys.k(); ++r) {
    row.clear();
    for (std::size_t j = 0; j < sys.n(); ++j) {
      if (j) row += ' ';
      row += std::to_string(sys.column(j)[r]);
    }
    os << row << "\n";
  }
}

void write_params(std::ostream& os, const std::vector<ParamsRow>& rows, Format fmt) {
  if (fmt == Format::json) {
    ordered_json a = ordered_json::array();
    for (const auto& r : rows)
      a.push_back({{"m", r.m}, {"q", r.q}, {"N", big_json(r.params.n)}, {"K", big_json(r.params.k)},
                   {"d_min", big_json(r.params.d_min)}});
    os << a.dump() << "\n";
    return;
  }
  os << "m, q, N, K, d_min\n";
  for (const auto& r : rows)
    os << r.m << ", " << r.q << ", " << big(r.params.n) << ", " << big(r.params.k) << ", " << big(r.params.d_min)
       << "\n";
}

void write_spectrum(std::ostream& os, const SpectrumReport& rep, const FormFile& inst, Format fmt) {
  if (fmt == Format::json) {
    ordered_json j{{"m", inst.m}, {"p", inst.p}, {"e", inst.e}, {"mode", rep.mode}, {"seed", rep.seed},
                   {"forms_scanned", rep.forms_scanned}, {"min_nonzero_weight", rep.min_nonzero_weight},
                   {"histogram", ordered_json::array()}};
    for (auto& [w, c] : rep.histogram) j["histogram"].push_back({{"weight", w}, {"count", c}});
    os << j.dump() << "\n";
    return;
  }
  os << "weight,count\n";
  for (auto& [w, c] : rep.histogram) os << w << "," << c << "\n";
}

void write_spectrum_meta(std::ostream& os, const SpectrumReport& rep) {
  ordered_json j{{"mode", rep.mode}, {"seed", rep.seed}, {"forms_scanned", rep.forms_scanned},
                 {"wall_time_seconds", rep.seconds}};
  os << j.dump() << "\n";
}

void write_classification(std::ostream& os, const ClassificationReport& rep, Format fmt) {
  if (fmt == Format::json) {
    ordered_json j{{"A", rep.a},
                   {"B", rep.b},
                   {"C", rep.c},
                   {"radDim", rep.rad_dim},
                   {"profile", rep.rad_profile.label()},
                   {"fixCount", rep.fix_count},
                   {"weightFromABC", rep.weight_from_abc},
                   {"weightDirect", rep.weight_direct ? ordered_json(*rep.weight_direct) : ordered_json(nullptr)},
                   {"checks", rep.checks}};
    os << j.dump(2) << "\n";
    return;
  }
  os << "key,value\n"
     << "A," << rep.a << "\nB," << rep.b << "\nC," << rep.c << "\nradDim," << rep.rad_dim << "\nprofile,"
     << rep.rad_profile.label() << "\nfixCount," << rep.fix_count << "\nweightFromABC," << rep.weight_from_abc
     << "\nweightDirect," << (rep.weight_direct ? std::to_string(*rep.weight_direct) : "") << "\n";
  for (const auto& c : rep.checks) os << "check," << c << "\n";
}

void write_bounds(std::ostream& os, const BoundTable& t, Format fmt) {
  if (fmt == Format::json) {
    ordered_json a = ordered_json::array();
    for (const auto& r : t.rows)
      a.push_back({{"i", r.i}, {"xi", big_json(r.xi)}, {"muMax", big_json(r.mu_max)},
                   {"dLower", big_json(r.d_lower.ceil())}});
    os << ordered_json{{"m", t.m}, {"q", t.q}, {"rows", a}}.dump() << "\n";
    return;
  }
  os << "i, xi, muMax, dLower\n";
  for (const auto& r : t.rows)
    os << r.i << ", " << big(r.xi) << ", " << big(r.mu_max) << ", " << big(r.d_lower.ceil()) << "\n";
}

void write_weights(std::ostream& os, const FormCheck& c, Format fmt) {
  if (fmt == Format::json) {
    ordered_json j{{"rank", c.rank},           {"weightDirect", c.direct},
                   {"weightRecursive", c.recursive}, {"weightFromABC", c.from_abc},
                   {"agree", c.weights_agree()},   {"caseValues", c.case_values_ok},
                   {"conservation", c.conservation_ok}, {"bound", c.bound_ok}};
    os << j.dump(2) << "\n";
    return;
  }
  os << "method,weight\ndirect," << c.direct << "\nrecursive," << c.recursive << "\nfrom_abc," << c.from_abc << "\n";
}

void write_min_distance(std::ostream& os, const MinDistanceResult& r, const FormFile& inst, Format fmt) {
  if (fmt == Format::json) {
    ordered_json j{{"m", inst.m},
                   {"p", inst.p},
                   {"e", inst.e},
                   {"d", r.d},
                   {"certificate", r.certificate},
                   {"witness_kind", r.witness_kind},
                   {"seed", r.seed},
                   {"forms_scanned", r.forms_scanned},
                   {"sample_min", r.sample_min},
                   {"upper", r.witness}};
    os << j.dump(2) << "\n";
    return;
  }
  os << "key,value\nd," << r.d << "\ncertificate," << r.certificate << "\nwitness_kind," << r.witness_kind
     << "\nseed," << r.seed << "\nforms_scanned," << r.forms_scanned << "\nsample_min," << r.sample_min
     << "\nupper,";
  for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? " " : "") << int(r.witness[i]);
  os << "\n";
}

void write_checks(std::ostream& os, const std::vector<CheckResult>& checks, Format fmt) {
  if (fmt == Format::json) {
    ordered_json a = ordered_json::array();
    for (const auto& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    os << a.dump(2) << "\n";
    return;
  }
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
}

}  // namespace hgc::io
