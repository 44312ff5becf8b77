#include "quadinv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "quadinv/golden.hpp"
#include "quadinv/involution.hpp"
#include "quadinv/json_io.hpp"
#include "quadinv/loci.hpp"
#include "quadinv/recoupling.hpp"

namespace quadinv::cli {

namespace {

// A form given either as a file (--f) or inline (--f-json).
struct FormArg {
  std::string flag;
  std::string path;
  std::string inline_json;

  bool given() const { return !path.empty() || !inline_json.empty(); }

  Json load() const {
    if (!path.empty() && !inline_json.empty()) {
      throw ValidationError("give only one of " + flag + " and " + flag + "-json");
    }
    if (!given()) throw ValidationError(flag + " or " + flag + "-json is required");
    if (!inline_json.empty()) return parse(inline_json);
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

 private:
  static Json parse(const std::string& text) {
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
  }
};

void add_form(CLI::App* sub, FormArg& arg, const std::string& name, const std::string& what) {
  arg.flag = "--" + name;
  sub->add_option(arg.flag, arg.path, what + " as a JSON file");
  sub->add_option(arg.flag + "-json", arg.inline_json, what + " as inline JSON");
}

bool is_symbolic(const Json& form) {
  if (!form.is_object() || !form.contains("cayley") || !form.at("cayley").is_array()) return false;
  for (const auto& c : form.at("cayley")) {
    if (c.is_object()) return true;
  }
  return false;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ValidationError("empty entry in list '" + text + "'");
    out.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

HalfInt parse_half(const Rational& r) {
  const Rational twice = r * Rational(2);
  if (!twice.is_integer() || twice.sign() < 0) {
    throw ValidationError("labels must be nonnegative half-integers, got " + r.to_string());
  }
  return HalfInt::from_twice(static_cast<int>(twice.numerator().get_si()));
}

SixLabels parse_labels(const std::string& text) {
  const auto v = parse_rational_list(text);
  if (v.size() != 6) throw ValidationError("--labels needs six values j1,j2,j3,j12,j23,J");
  return {parse_half(v[0]), parse_half(v[1]), parse_half(v[2]),
          parse_half(v[3]), parse_half(v[4]), parse_half(v[5])};
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

Json polys(const std::vector<MultiPoly>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

Involutor involutor_from(const std::string& sign, const std::string& zlist, int d) {
  if (!sign.empty() && !zlist.empty()) throw ValidationError("give only one of -s and --z");
  if (!sign.empty()) return z_from_sign(SignSequence::parse(sign));
  if (zlist.empty()) throw ValidationError("an involutor is required (-s or --z)");
  Involutor z{d, parse_rational_list(zlist)};
  if (static_cast<int>(z.z.size()) != d / 2 + 1) {
    throw ValidationError("d=" + std::to_string(d) + " needs " + std::to_string(d / 2 + 1) +
                          " entries in --z");
  }
  return z;
}

// Each subcommand fills `result` or sets `status` for a non-zero exit.
struct Outcome {
  Json result;
  int status = kOk;
};

using Handler = std::function<Outcome()>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact transvectant calculus of binary forms", "quadinv"};
  app.require_subcommand(1);
  std::map<CLI::App*, Handler> handlers;

  // transvect
  FormArg ta, tb;
  int tr = 0;
  {
    auto* sub = app.add_subcommand("transvect", "r-th transvectant (A,B)_r");
    add_form(sub, ta, "a", "form A");
    add_form(sub, tb, "b", "form B");
    sub->add_option("-r", tr, "transvectant index")->required();
    handlers[sub] = [&] {
      const Json a = ta.load();
      const Json b = tb.load();
      if (is_symbolic(a) || is_symbolic(b)) {
        return Outcome{{{"result", to_json(transvectant(poly_form_from_json(a), poly_form_from_json(b), tr))}}};
      }
      return Outcome{
          {{"result", to_json(transvectant(rational_form_from_json(a), rational_form_from_json(b), tr))}}};
    };
  }

  // sys
  int sys_d = 0;
  {
    auto* sub = app.add_subcommand("sys", "alpha table and equations of SYS(d)");
    sub->add_option("-d", sys_d, "order of F")->required()->check(CLI::Range(0, 64));
    handlers[sub] = [&] {
      const QuadraticSystem sys = build_sys(sys_d);
      const int n = sys.half_degree();
      Json alpha = Json::object();
      Json equations = Json::array();
      for (int t = 0; t <= 2 * n; t += 2) {
        Json table = Json::array();
        for (int i = 0; i <= n; ++i) {
          std::vector<Rational> row;
          for (int j = 0; j <= n; ++j) row.push_back(sys.alpha(t, i, j));
          table.push_back(rationals(row));
        }
        alpha[std::to_string(t)] = std::move(table);
        if (t > 0) equations.push_back(sys.render_equation(t));
      }
      equations.push_back(sys.render_equation(0));
      return Outcome{{{"alpha", std::move(alpha)}, {"d", sys_d}, {"equations", std::move(equations)}}};
    };
  }

  // involutors
  int inv_d = 0;
  std::string inv_verify = "fast";
  {
    auto* sub = app.add_subcommand("involutors", "all involutors of order d with their sign sequences");
    sub->add_option("-d", inv_d, "order of F")->required()->check(CLI::Range(0, 40));
    sub->add_option("--verify", inv_verify, "fast (SYS membership) or symbolic (sigma^2 = Delta^d)")
        ->check(CLI::IsMember({"fast", "symbolic"}));
    handlers[sub] = [&] {
      const auto all = enumerate_involutors(inv_d);
      std::vector<bool> ok;
      if (inv_verify == "symbolic") {
        std::vector<Involutor> zs;
        for (const auto& e : all) zs.push_back(e.z);
        ok = verify_symbolic_all(zs);
      } else {
        const QuadraticSystem sys = build_sys(inv_d);
        for (const auto& e : all) ok.push_back(sys.is_satisfied_by(e.z.z));
      }
      Json list = Json::array();
      for (std::size_t k = 0; k < all.size(); ++k) {
        list.push_back({{"sign", all[k].sign.to_string()}, {"verified", static_cast<bool>(ok[k])},
                        {"z", rationals(all[k].z.z)}});
      }
      return Outcome{std::move(list)};
    };
  }

  // z-of-sign
  std::string zs_sign;
  {
    auto* sub = app.add_subcommand("z-of-sign", "closed-form involutor of a sign sequence");
    sub->add_option("-s,--sign", zs_sign, "sign sequence such as +-+-+")->required();
    handlers[sub] = [&] {
      const SignSequence s = SignSequence::parse(zs_sign);
      return Outcome{{{"sign", s.to_string()}, {"z", rationals(z_from_sign(s).z)}}};
    };
  }

  // verify
  int ver_d = 0;
  std::string ver_z, ver_sign, ver_mode = "both";
  {
    auto* sub = app.add_subcommand("verify", "check that z is an involutor");
    sub->add_option("-d", ver_d, "order of F")->check(CLI::Range(0, 40));
    sub->add_option("--z", ver_z, "comma-separated z_0,...,z_n");
    sub->add_option("-s,--sign", ver_sign, "sign sequence (instead of --z)");
    sub->add_option("--mode", ver_mode, "fast, symbolic or both")
        ->check(CLI::IsMember({"fast", "symbolic", "both"}));
    handlers[sub] = [&] {
      const Involutor z = involutor_from(ver_sign, ver_z, ver_d);
      Json j{{"d", z.d}, {"z", rationals(z.z)}};
      bool ok = true;
      if (ver_mode != "symbolic") {
        j["fast"] = verify_involutor(z, VerifyMode::Fast);
        ok = ok && j["fast"].get<bool>();
      }
      if (ver_mode != "fast") {
        j["symbolic"] = verify_involutor(z, VerifyMode::Symbolic);
        ok = ok && j["symbolic"].get<bool>();
      }
      if (ver_mode == "both") j["agree"] = j["fast"] == j["symbolic"];
      j["verified"] = ok;
      return Outcome{std::move(j)};
    };
  }

  // apply-sigma
  FormArg aq, af;
  std::string as_sign, as_z;
  {
    auto* sub = app.add_subcommand("apply-sigma", "sigma_{Q,z}(F)");
    add_form(sub, aq, "q", "quadratic Q");
    add_form(sub, af, "f", "form F");
    sub->add_option("-s,--sign", as_sign, "sign sequence selecting z");
    sub->add_option("--z", as_z, "comma-separated z_0,...,z_n (instead of -s)");
    handlers[sub] = [&] {
      const Json q = aq.load();
      const Json f = af.load();
      if (is_symbolic(q) || is_symbolic(f)) {
        const PolyForm pf = poly_form_from_json(f);
        const Involutor z = involutor_from(as_sign, as_z, pf.order());
        return Outcome{{{"result", to_json(sigma_apply(poly_form_from_json(q), z, pf))}}};
      }
      const RationalForm rf = rational_form_from_json(f);
      const Involutor z = involutor_from(as_sign, as_z, rf.order());
      return Outcome{{{"result", to_json(sigma_apply(rational_form_from_json(q), z, rf))}}};
    };
  }

  // canonical
  std::string can_sign;
  FormArg cf;
  {
    auto* sub = app.add_subcommand("canonical", "canonical monomial basis and membership test");
    sub->add_option("-s,--sign", can_sign, "sign sequence")->required();
    add_form(sub, cf, "f", "form F to test (optional)");
    handlers[sub] = [&] {
      const SignSequence s = SignSequence::parse(can_sign);
      const CanonicalBasis b = canonical_basis(s);
      Json j{{"minus", b.minus}, {"plus", b.plus}, {"sign", s.to_string()}};
      if (cf.given()) j["canonical"] = canonical_check(s, rational_form_from_json(cf.load()));
      return Outcome{std::move(j)};
    };
  }

  // omega
  int oa = 0, ob = 0, orr = 0, os_ = 0, od = 0;
  std::optional<int> ot;
  {
    auto* sub = app.add_subcommand("omega", "omega(a,b;r,s;t) for F of order d");
    sub->add_option("-a", oa)->required();
    sub->add_option("-b", ob)->required();
    sub->add_option("-r", orr)->required();
    sub->add_option("-s", os_)->required();
    sub->add_option("-d", od)->required();
    sub->add_option("-t", ot, "single t (default: the whole expansion)");
    handlers[sub] = [&] {
      Json table = Json::object();
      if (ot) {
        table[std::to_string(*ot)] = to_json(omega(oa, ob, orr, os_, *ot, od));
        return Outcome{{{"omega", std::move(table)}}};
      }
      Json detail = Json::object();
      for (const auto& [t, term] : expand_compound(oa, ob, orr, os_, od)) {
        table[std::to_string(t)] = to_json(term.coefficient);
        detail[std::to_string(t)] = {{"delta_power", term.delta_power},
                                     {"transvectant_index", term.transvectant_index}};
      }
      return Outcome{{{"omega", std::move(table)}, {"terms", std::move(detail)}}};
    };
  }

  // recouple
  int ra = 0, rb = 0, rc = 0, rr = 0, rs = 0;
  {
    auto* sub = app.add_subcommand("recouple", "theta_k in (A,(B,C)_r)_s = sum theta_k ((A,B)_k,C)_(r+s-k)");
    sub->add_option("-a", ra)->required();
    sub->add_option("-b", rb)->required();
    sub->add_option("-c", rc)->required();
    sub->add_option("-r", rr)->required();
    sub->add_option("-s", rs)->required();
    handlers[sub] = [&] {
      Json table = Json::object();
      for (const auto& [k, v] : theta_coefficients(ra, rb, rc, rr, rs).coefficients) {
        table[std::to_string(k)] = to_json(v);
      }
      return Outcome{{{"theta", std::move(table)}}};
    };
  }

  // sixj / tetra
  std::string sixj_labels, tetra_labels;
  {
    auto* sub = app.add_subcommand("sixj", "Wigner 6-j symbol {j1 j2 j12; j3 J j23}");
    sub->add_option("--labels", sixj_labels, "j1,j2,j3,j12,j23,J (e.g. 1/2,1/2,1,0,1/2,1/2)")->required();
    handlers[sub] = [&] { return Outcome{{{"sixj", to_json(racah_6j(parse_labels(sixj_labels)))}}}; };
  }
  {
    auto* sub = app.add_subcommand("tetra", "tetrahedron normalisation and its factorisation");
    sub->add_option("--labels", tetra_labels, "j1,j2,j3,j12,j23,J")->required();
    handlers[sub] = [&] {
      const SixLabels l = parse_labels(tetra_labels);
      return Outcome{{{"alpha_tilde", to_json(alpha_tilde(l))},
                      {"normalisation", to_json(tetra_normalisation(l))},
                      {"tetra", to_json(tetra_cg(l))}}};
    };
  }

  // centres
  std::string cen_sign;
  FormArg cenf;
  {
    auto* sub = app.add_subcommand("centres", "generators of the centre locus in q0,q1,q2");
    sub->add_option("-s,--sign", cen_sign, "sign sequence selecting z")->required();
    add_form(sub, cenf, "f", "form F");
    handlers[sub] = [&] {
      const CentreSystem cs =
          centre_conditions(z_from_sign(SignSequence::parse(cen_sign)), rational_form_from_json(cenf.load()));
      return Outcome{{{"d", cs.d}, {"generators", polys(cs.generators)}}};
    };
  }

  // covariant
  std::string cov_kind;
  FormArg covf;
  {
    auto* sub = app.add_subcommand("covariant", "beta = (Q^2,F)_3 or lambda = (Q^3,F)_5");
    sub->add_option("kind", cov_kind, "beta or lambda")->required()->check(CLI::IsMember({"beta", "lambda"}));
    add_form(sub, covf, "f", "form F");
    handlers[sub] = [&] {
      const RationalForm f = rational_form_from_json(covf.load());
      const PolyForm c = cov_kind == "beta" ? beta_covariant(f) : lambda_covariant(f);
      return Outcome{{{"covariant", to_json(c)}, {"kind", cov_kind}}};
    };
  }

  // curve
  FormArg curvef;
  {
    auto* sub = app.add_subcommand("curve", "the cubic (Q^3,F)_6 of a sextic");
    add_form(sub, curvef, "f", "sextic F");
    handlers[sub] = [&] {
      return Outcome{{{"curve", to_json(sextic_cubic_curve(rational_form_from_json(curvef.load())))}}};
    };
  }

  // geometric
  int geo_d = 0;
  {
    auto* sub = app.add_subcommand("geometric", "the geometric involutor g");
    sub->add_option("-d", geo_d, "order of F")->required()->check(CLI::Range(0, 200));
    handlers[sub] = [&] { return Outcome{{{"z", rationals(geometric_involutor(geo_d).z)}}}; };
  }

  // paper-check
  {
    auto* sub = app.add_subcommand("paper-check", "recompute the golden values; exit 1 on any mismatch");
    handlers[sub] = [&] {
      Json items = Json::array();
      bool all = true;
      for (const auto& g : golden_suite()) {
        items.push_back({{"computed", g.computed}, {"expected", g.expected}, {"name", g.name}, {"pass", g.pass}});
        all = all && g.pass;
      }
      return Outcome{{{"all_pass", all}, {"items", std::move(items)}}, all ? kOk : kUsageError};
    };
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    Outcome o = handlers.at(chosen)();
    out << o.result.dump(2) << "\n";
    return o.status;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::logic_error& e) {
    // ValidationError, RangeError and friends.
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace quadinv::cli
