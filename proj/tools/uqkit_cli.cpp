// uqkit: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 semantic rejection (invalid representation, not Schurian, ...).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uqkit/duality.hpp"
#include "uqkit/errors.hpp"
#include "uqkit/io.hpp"
#include "uqkit/suite.hpp"
#include "uqkit/sweep.hpp"

using namespace uqkit;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kRejected = 3;

// Raised for semantic rejections that are not library exceptions.
struct Rejected : Error {
  using Error::Error;
};

std::optional<Rational> eval_point;

std::string show(const QScalar& x) {
  if (!eval_point) return x.str();
  const Rational v = evaluate(x, *eval_point);
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_num().get_str() + "/" + v.get_den().get_str();
}

void set_eval(const std::string& spec) {
  if (spec.empty()) return;
  static const std::regex re(R"(\s*q\s*=\s*(-?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw ParseError("--eval expects q=r with r an integer or a fraction, got \"" + spec + "\"");
  Rational r(m[1].str());
  if (m[2].matched) r /= Rational(m[2].str());
  r.canonicalize();
  eval_point = r;
  evaluate(QScalar(1), r);  // reject forbidden points before any work
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("range must look like a..b, got \"" + text + "\"");
  const int a = std::stoi(m[1].str());
  const int b = std::stoi(m[2].str());
  if (a > b) throw ParseError("empty range \"" + text + "\"");
  return {a, b};
}

Json scalar_json(const QScalar& x) { return show(x); }

// Re-renders every "coeff" / vector entry under --eval.
Json element_json(const UqElement& u) {
  Json j = to_json(u);
  for (auto& t : j["terms"]) t["coeff"] = show(u.coeff(Monomial{t["l"].get<int>(), t["i"].get<int>(), t["j"].get<int>()}));
  return j;
}

Json rep_element_json(const RepElement& e) {
  Json comps = Json::array();
  for (const auto& [l, v] : e.components()) {
    Json vj = Json::array();
    for (const auto& x : v) vj.push_back(show(x));
    comps.push_back({{"l", l}, {"v", vj}});
  }
  return {{"components", comps}};
}

std::string tensor_text(const UqTensor& t) {
  if (!eval_point) return to_string(t);
  std::string out;
  for (const auto& [legs, c] : t.terms()) {
    std::string s = show(c) + " *";
    for (const auto& m : legs) s += " " + to_string(m);
    out += s + "\n";
  }
  return out.empty() ? "0" : out.substr(0, out.size() - 1);
}

Json tensor_json(const UqTensor& t) {
  Json terms = Json::array();
  for (const auto& [legs, c] : t.terms()) {
    Json lj = Json::array();
    for (const auto& m : legs) lj.push_back({{"l", m.l}, {"i", m.i}, {"j", m.j}});
    terms.push_back({{"legs", lj}, {"coeff", show(c)}});
  }
  return {{"arity", t.arity()}, {"terms", terms}};
}

std::string path_vector_text(const PathVector& x) {
  if (!eval_point) return to_string(x);
  std::string out;
  for (const auto& [p, c] : x.terms()) out += (out.empty() ? "" : " + ") + show(c) + "*P" + to_string(p);
  return out.empty() ? "0" : out;
}

void check_element_shape(const QuiverRep& rep, const RepElement& m) {
  for (const auto& [l, v] : m.components())
    if (static_cast<int>(v.size()) != rep.dim(l))
      throw ShapeMismatch("element has length " + std::to_string(v.size()) + " at vertex " + std::to_string(l) +
                          " but the representation has dimension " + std::to_string(rep.dim(l)));
}

// Closed forms composed letter by letter, rightmost first.
RepElement act_closed_word(const SlPoly& x, const QuiverRep& rep, const RepElement& m) {
  RepElement out;
  for (const auto& [w, c] : x.terms()) {
    RepElement cur = m;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_closed(*it, rep, cur);
    out += c * cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verbs

struct ExpandOpts {
  int l = 0, i = 0, j = 0, legs = 2;
  std::string element;
  bool primed = false, closed_form = false, json = false;
};

int run_expand(const ExpandOpts& o) {
  if (o.legs < 1) throw ParseError("--legs must be at least 1");
  if (o.i < 0 || o.j < 0) throw ParseError("--i and --j must be non-negative");
  UqTensor t(o.legs);
  if (o.closed_form) {
    if (!o.element.empty()) throw ParseError("--closed-form works on a single primed monomial, not --element");
    t = delta_closed_form(o.l, o.i, o.j, o.legs);
  } else {
    const UqElement u = !o.element.empty() ? uq_element_from_json(parse_json(o.element))
                        : o.primed         ? primed_monomial(o.l, o.i, o.j)
                                           : uq_monomial(o.l, o.i, o.j);
    t = iterated_coproduct(u, o.legs - 1);
  }
  if (o.json) std::cout << tensor_json(t).dump() << "\n";
  else std::cout << tensor_text(t) << "\n";
  return kOk;
}

struct BasisOpts {
  int l = 0, n = 0, i = 0;
  bool json = false, preimage = false;
};

int run_basis_b(const BasisOpts& o) {
  if (o.n < 0 || o.i < 0 || o.i > o.n) throw ParseError("basis-b requires 0 <= i <= n");
  const PathVector b = basis_b(o.l, o.n, o.i);
  if (o.json) {
    Json j = to_json(b);
    for (auto& t : j["terms"]) t["coeff"] = show(b.coeff(parse_path(t["path"].get<std::string>())));
    if (o.preimage) j["preimage"] = element_json(b_preimage(o.l, o.n, o.i));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << path_vector_text(b) << "\n";
    if (o.preimage) std::cout << "theta^-1: " << to_string(b_preimage(o.l, o.n, o.i)) << "\n";
  }
  return kOk;
}

struct Verify31Opts {
  int max_degree = 4;
  std::string l_range = "-2..2";
  bool serial = false;
};

int run_verify_31(const Verify31Opts& o) {
  if (o.max_degree < 0) throw ParseError("--max-degree must be non-negative");
  const auto [lo, hi] = parse_range(o.l_range);
  const auto t0 = std::chrono::steady_clock::now();
  const auto cells = sweep_identity_31(o.max_degree, lo, hi, o.serial ? Exec::Serial : Exec::Parallel);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int bad = 0;
  for (const auto& c : cells)
    if (!c.ok) {
      ++bad;
      std::cout << "FAIL (l,i,j)=(" << c.l << "," << c.i << "," << c.j << ") difference: " << c.difference << "\n";
    }
  std::cout << "verify-31: " << cells.size() - static_cast<std::size_t>(bad) << "/" << cells.size()
            << " cells pass (i+j <= " << o.max_degree << ", l in " << lo << ".." << hi << ")\n";
  std::fprintf(stderr, "verify-31: %.3f s\n", secs);
  return bad == 0 ? kOk : kVerifyFailed;
}

struct BuildOpts {
  std::string schurian;
  std::string quantum_plane;
  int l = 0, n = 0;
};

int run_build_rep(const BuildOpts& o) {
  QuiverRep rep;
  if (!o.schurian.empty() == !o.quantum_plane.empty())
    throw ParseError("build-rep needs exactly one of --schurian or --quantum-plane");
  if (!o.schurian.empty()) {
    static const std::regex re(R"(\s*(-?\d+)\s*,\s*(\d+)\s*,(.+))");
    std::smatch m;
    if (!std::regex_match(o.schurian, m, re)) throw ParseError("--schurian expects l,n,lambda");
    rep = schurian_rep(std::stoi(m[1].str()), std::stoi(m[2].str()), parse_lambda(m[3].str()));
  } else {
    if (o.n < 0) throw ParseError("--n must be non-negative");
    const Json j = parse_json(read_file(o.quantum_plane));
    const Json& xj = j.contains("X") ? j["X"] : j.at("x");
    const Json& yj = j.contains("Y") ? j["Y"] : j.at("y");
    auto matrix = [](const Json& rows) {
      std::vector<std::vector<QScalar>> out;
      for (const auto& r : rows) {
        out.emplace_back();
        for (const auto& x : r) out.back().push_back(x.is_string() ? QScalar::parse(x.get<std::string>()) : QScalar(x.get<long>()));
      }
      return Matrix::from_rows(out);
    };
    rep = from_quantum_plane(o.l, o.n, QuantumPlaneModule{matrix(xj), matrix(yj)});
  }
  std::cout << to_json(rep).dump() << "\n";
  return kOk;
}

int run_classify(const std::string& file) {
  const QuiverRep rep = rep_from_json(parse_json(read_file(file)));
  const auto result = classify_schurian(rep);
  if (const auto* s = std::get_if<SchurianData>(&result)) {
    std::cout << to_json(*s).dump() << "\n";
    return kOk;
  }
  const auto& rej = std::get<Rejection>(result);
  static const char* kinds[] = {"zero", "not-schurian", "not-comodule", "decomposable"};
  Json j = {{"rejected", kinds[static_cast<int>(rej.kind)]}, {"reason", rej.reason}};
  std::cout << j.dump() << "\n";
  return kRejected;
}

struct ActOpts {
  std::string word, rep_file, element;
  bool closed_form = false, check = false;
};

int run_act(const ActOpts& o) {
  const SlPoly x = parse_word(o.word);
  const QuiverRep rep = rep_from_json(parse_json(read_file(o.rep_file)));
  const RepElement m = rep_element_from_json(parse_json(o.element));
  check_element_shape(rep, m);
  const ValidationReport v = validate_rep(rep);
  if (!v.ok()) throw ValidationError(v.violations.front());
  if (o.check) {
    const RepElement generic = act_word(x, rep, m);
    const RepElement closed = act_closed_word(x, rep, m);
    std::cout << rep_element_json(generic).dump() << "\n";
    if (!(generic == closed)) {
      std::cerr << "act --check: closed form gives " << closed.str() << "\n";
      return kVerifyFailed;
    }
    return kOk;
  }
  const RepElement out = o.closed_form ? act_closed_word(x, rep, m) : act_word(x, rep, m);
  std::cout << rep_element_json(out).dump() << "\n";
  return kOk;
}

struct SuiteCliOpts {
  std::vector<int> only;
  bool serial = false, timings = false, details = false;
  std::string contract;
};

int run_verify_suite(const SuiteCliOpts& o) {
  SuiteOptions opts{o.serial ? Exec::Serial : Exec::Parallel, o.contract};
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), id) == o.only.end()) continue;
    const CriterionResult r = run_criterion(id, opts);
    all = all && r.passed;
    std::cout << summary_line(r) << "\n";
    if (o.details)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    if (o.timings) std::fprintf(stderr, "criterion %d: %.3f s\n", id, r.seconds);
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in U_q(sl_2), its path-coalgebra model and the dual SL_q(2)-modules."};
  app.name("uqkit");
  app.require_subcommand(1);
  app.fallthrough();
  std::string eval_spec;
  app.add_option("--eval", eval_spec, "Specialize printed scalars at q=r (r rational, not 0 or +-1)");

  ExpandOpts ex;
  auto* cmd_expand = app.add_subcommand("expand-coproduct", "Iterated coproduct of a PBW monomial or element");
  cmd_expand->add_option("--l", ex.l, "Power of K");
  cmd_expand->add_option("--i", ex.i, "Power of E (or E' with --primed)");
  cmd_expand->add_option("--j", ex.j, "Power of F");
  cmd_expand->add_option("--legs", ex.legs, "Number of tensor legs (default 2)");
  cmd_expand->add_option("--element", ex.element, "Element as JSON instead of a monomial");
  cmd_expand->add_flag("--primed", ex.primed, "Read --i as the power of E' = K^-1 E");
  cmd_expand->add_flag("--closed-form", ex.closed_form, "Use the closed-form expansion of K^l E'^i F^j");
  cmd_expand->add_flag("--json", ex.json, "JSON output");

  BasisOpts bo;
  auto* cmd_basis = app.add_subcommand("basis-b", "The path-coalgebra element b(l, n, i)");
  cmd_basis->add_option("--l", bo.l, "Start vertex")->required();
  cmd_basis->add_option("--n", bo.n, "Path length")->required();
  cmd_basis->add_option("--i", bo.i, "Number of upper arrows")->required();
  cmd_basis->add_flag("--preimage", bo.preimage, "Also print the U_q(sl_2) element mapping onto it");
  cmd_basis->add_flag("--json", bo.json, "JSON output");

  Verify31Opts vo;
  auto* cmd_v31 = app.add_subcommand("verify-31", "Check theta(K^l E'^i F^j) against the scaled b-basis on a grid");
  cmd_v31->add_option("--max-degree", vo.max_degree, "Largest i + j (default 4)");
  cmd_v31->add_option("--l", vo.l_range, "Range a..b of l (default -2..2)");
  cmd_v31->add_flag("--serial", vo.serial, "Use the serial reference sweep");

  BuildOpts bu;
  auto* cmd_build = app.add_subcommand("build-rep", "Print a constructed representation as JSON");
  cmd_build->add_option("--schurian", bu.schurian, "l,n,lambda with lambda in the scalar grammar or inf");
  cmd_build->add_option("--quantum-plane", bu.quantum_plane, "JSON file {\"X\":[[...]],\"Y\":[[...]]}");
  cmd_build->add_option("--l", bu.l, "Start vertex for --quantum-plane");
  cmd_build->add_option("--n", bu.n, "Number of arrows for --quantum-plane");

  std::string classify_file;
  auto* cmd_classify = app.add_subcommand("classify", "Identify (l, n, lambda) of a Schurian representation");
  cmd_classify->add_option("rep", classify_file, "Representation JSON file (- for stdin)")->required();

  ActOpts ao;
  auto* cmd_act = app.add_subcommand("act", "Act with an SL_q(2) word on an element of a representation");
  cmd_act->add_option("word", ao.word, "Word, e.g. \"d*a - q*b*c - 1\"; empty is the unit")->required();
  cmd_act->add_option("rep", ao.rep_file, "Representation JSON file")->required();
  cmd_act->add_option("element", ao.element, "Element JSON, e.g. {\"l\":0,\"v\":[1]}")->required();
  cmd_act->add_flag("--closed-form", ao.closed_form, "Use the closed-form generator actions");
  cmd_act->add_flag("--check", ao.check, "Compute both ways and fail on disagreement");

  SuiteCliOpts so;
  auto* cmd_suite = app.add_subcommand("verify-suite", "Run the acceptance criteria");
  cmd_suite->add_option("--only", so.only, "Criterion ids to run");
  cmd_suite->add_flag("--serial", so.serial, "Use the serial reference sweeps");
  cmd_suite->add_flag("--details", so.details, "Print every check");
  cmd_suite->add_flag("--timings", so.timings, "Print timings to stderr");
  cmd_suite->add_option("--contract", so.contract, "Shell command running the CLI contract script");

  // Values such as `-2..2` or `-1` must not be mistaken for flags.
  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.allow_extras(false);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    set_eval(eval_spec);
    if (*cmd_expand) return run_expand(ex);
    if (*cmd_basis) return run_basis_b(bo);
    if (*cmd_v31) return run_verify_31(vo);
    if (*cmd_build) return run_build_rep(bu);
    if (*cmd_classify) return run_classify(classify_file);
    if (*cmd_act) return run_act(ao);
    if (*cmd_suite) return run_verify_suite(so);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ForbiddenSpecialization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed payload: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // ValidationError, QuantumPlaneRelationError, PoleError, Rejected.
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}
