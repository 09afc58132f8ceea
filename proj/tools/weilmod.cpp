#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "weilmod/schwartz.hpp"
#include "weilmod/selfcheck.hpp"
#include "weilmod/theta.hpp"
#include "weilmod/weilfactor.hpp"

using namespace weilmod;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string field = "fq:3:1";
  std::string psi = "psi:level0";
  std::string coeff = "cyclo";
  std::string format = "json";
  std::string output;
  bool approx = false;
};

json big(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

json rat(const Rational& r) {
  if (denominator(r) == 1) return big(numerator(r));
  return to_string(r);
}

json cyc(const CycInt& x0, bool approx) {
  auto x = x0.descend();
  json j;
  j["ring"] = x.p() ? "Q(zeta_" + std::to_string(x.order()) + ")" : "Q";
  json c = json::array();
  for (auto& n : x.num()) c.push_back(rat(Rational(n, x.den())));
  j["coeffs"] = c;
  if (approx) {
    // complex embedding zeta -> exp(2 pi i / N); informational only
    double re = 0, im = 0, N = double(x.order());
    for (size_t k = 0; k < x.num().size(); ++k) {
      double v = static_cast<double>(Rational(x.num()[k], x.den()));
      re += v * std::cos(2 * M_PI * double(k) / N);
      im += v * std::sin(2 * M_PI * double(k) / N);
    }
    j["approx_non_authoritative"] = {re, im};
  }
  return j;
}

json fin(const GFElem& x) { return {{"ring", x.F->name()}, {"value", x.F->elem_str(x.v)}}; }

json elem(const FqBase& F, const GFElem& x) { return F.str(x); }
json elem(const QpBase&, const Rational& x) { return rat(x); }

template <class K>
json matj(const K& F, const Mat<typename K::Elem>& m) {
  json rows = json::array();
  for (int i = 0; i < m.r; ++i) {
    json row = json::array();
    for (int j = 0; j < m.c; ++j) row.push_back(elem(F, m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string scalar_str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

template <class K>
typename K::Elem parse_elem(const K& F, const json& v) {
  if (v.is_number_integer()) return F.from_int(v.get<long long>());
  if (v.is_string()) return F.parse(v.get<std::string>());
  fail(ErrorKind::InvalidInput, "matrix entries must be integers or strings, got " + v.dump());
}

// row-major: nested [[..],[..]] or flat list of n^2 entries
template <class K>
Mat<typename K::Elem> parse_matrix(const K& F, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    fail(ErrorKind::InvalidInput, "unparseable matrix: " + text);
  }
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "matrix must be a non-empty list");
  std::vector<json> flat;
  int rows;
  if (j[0].is_array()) {
    rows = int(j.size());
    for (auto& r : j) {
      if (!r.is_array() || int(r.size()) != rows) fail(ErrorKind::InvalidInput, "matrix must be square");
      for (auto& x : r) flat.push_back(x);
    }
  } else {
    rows = int(std::lround(std::sqrt(double(j.size()))));
    if (size_t(rows) * size_t(rows) != j.size()) fail(ErrorKind::InvalidInput, "flat matrix length must be a square");
    for (auto& x : j) flat.push_back(x);
  }
  Mat<typename K::Elem> m(rows, rows, F.zero());
  for (size_t i = 0; i < flat.size(); ++i) m.a[i] = parse_elem(F, flat[i]);
  return m;
}

// "diag:a,b,..." or a JSON gram matrix
template <class K>
QuadraticForm<K> parse_form(const K& F, const std::string& s) {
  if (s.rfind("diag:", 0) == 0) {
    std::vector<typename K::Elem> a;
    std::stringstream ss(s.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(F.parse(tok));
    if (a.empty()) fail(ErrorKind::InvalidInput, "empty diagonal form");
    return QuadraticForm<K>::diagonal(F, a);
  }
  return QuadraticForm<K>(F, parse_matrix(F, s));
}

template <class K>
Mat<typename K::Elem> gram_of(const K& F, const std::string& s) {
  return parse_form(F, s).gram();
}

template <class Fn>
json with_field(const Common& c, Fn&& fn) {
  auto fs = parse_field(c.field);
  auto ps = parse_psi(c.psi);
  if (fs.finite) {
    if (denominator(ps.twist) != 1) fail(ErrorKind::InvalidInput, "finite-field psi twist must be an integer");
    FqBase F(fs.p, fs.f, static_cast<long long>(numerator(ps.twist)));
    return fn(F);
  }
  QpBase F(fs.p, ps.twist);
  return fn(F);
}

template <class K>
void require_symplectic(const K& F, const Mat<typename K::Elem>& g, int m, const char* what) {
  if (g.r != 2 * m) fail(ErrorKind::InvalidInput, std::string(what) + " must be " + std::to_string(2 * m) + "x" + std::to_string(2 * m));
  if (!is_symplectic(F, g)) fail(ErrorKind::InvalidInput, std::string(what) + " is not symplectic");
}

void model_cap(const FqBase& F, int m) {
  if (ipow(F.q(), m) > 81) fail(ErrorKind::Unsupported, "model dimension q^m exceeds 81");
}

// --- subcommands ---------------------------------------------------------

json cmd_omega(const Common& c, const std::string& form) {
  return with_field(c, [&](const auto& F) {
    auto Q = parse_form(F, form);
    return json{{"value", cyc(omega(Q), c.approx)}};
  });
}

json cmd_hilbert(const Common& c, const std::string& a, const std::string& b) {
  return with_field(c, [&](const auto& F) {
    auto x = F.parse(a), y = F.parse(b);
    if (is_zero(x) || is_zero(y)) fail(ErrorKind::InvalidInput, "hilbert symbol needs nonzero arguments");
    return json{{"value", hilbert(F, x, y)}};
  });
}

json cmd_hasse(const Common& c, const std::string& form) {
  return with_field(c, [&](const auto& F) {
    auto Q = parse_form(F, form);
    if (!Q.nondegenerate()) fail(ErrorKind::InvalidInput, "hasse invariant needs a nondegenerate form");
    return json{{"value", Q.hasse()}, {"det_class", elem(F, Q.det_nd())}};
  });
}

template <class K>
json formula_json(const K& F, const SympMat<K>& g1, const SympMat<K>& g2, bool rao) {
  auto r = cocycle_formula_full(F, g1, g2, rao);
  json j;
  j["value"] = r.value;
  j["leray"] = {{"S", r.leray.S}, {"S1", r.leray.S1}, {"S2", r.leray.S2}, {"l", r.leray.l()},
                {"rho", matj(F, r.leray.rho)}, {"p", matj(F, r.leray.p)},
                {"p1", matj(F, r.leray.p1)}, {"p2", matj(F, r.leray.p2)}};
  j["x_g1"] = scalar_str(elem(F, r.x1));
  j["x_g2"] = scalar_str(elem(F, r.x2));
  return j;
}

json cmd_cocycle(const Common& c, int m, const std::string& s1, const std::string& s2, const std::string& path,
                 bool exhaustive, bool rao) {
  if (path != "formula" && path != "operator") fail(ErrorKind::InvalidInput, "--path must be formula or operator");
  if (m < 1 || m > 3) fail(ErrorKind::Unsupported, "m must be 1, 2 or 3");
  return with_field(c, [&](const auto& F) -> json {
    using K = std::decay_t<decltype(F)>;
    if (exhaustive) {
      if constexpr (K::finite) {
        if (m != 1) fail(ErrorKind::Unsupported, "--exhaustive enumerates Sp_2 only");
        auto G = sp2_elements(F);
        if (G.size() * G.size() > 1000000) fail(ErrorKind::Unsupported, "--exhaustive: too many pairs");
        CycloRing R(F.p());
        std::vector<FiniteSigma> sig;
        for (auto& g : G) sig.push_back(sigma_finite(F, g));
        long nontrivial = 0, pairs = 0;
        for (size_t a = 0; a < G.size(); ++a)
          for (size_t b = 0; b < G.size(); ++b, ++pairs) {
            bool one = path == "operator"
                           ? cocycle_from_sigmas(R, F, sig[a], sig[b], sigma_finite(F, G[a] * G[b])) == R.one()
                           : cocycle_formula(F, G[a], G[b], rao) == 1;
            nontrivial += !one;
          }
        return json{{"trivial", nontrivial == 0}, {"pairs", pairs}};
      } else {
        fail(ErrorKind::InvalidInput, "--exhaustive needs a finite field");
      }
    }
    if (s1.empty() || s2.empty()) fail(ErrorKind::InvalidInput, "--g1 and --g2 are required");
    auto g1 = parse_matrix(F, s1), g2 = parse_matrix(F, s2);
    require_symplectic(F, g1, m, "g1");
    require_symplectic(F, g2, m, "g2");
    if (path == "formula") return formula_json(F, g1, g2, rao);
    if (rao) fail(ErrorKind::InvalidInput, "--rao applies to the formula path");
    if constexpr (K::finite) {
      model_cap(F, m);
      CycloRing R(F.p());
      return json{{"value", cyc(cocycle_operator(R, F, g1, g2), c.approx)}};
    } else {
      if (m != 1) fail(ErrorKind::Unsupported, "p-adic operator path is implemented for m = 1");
      return json{{"value", cyc(cocycle_operator_padic(F, g1, g2), c.approx)}};
    }
  });
}

json cmd_bruhat(const Common& c, const std::string& gs) {
  return with_field(c, [&](const auto& F) {
    auto g = parse_matrix(F, gs);
    if (g.r % 2 || !is_symplectic(F, g)) fail(ErrorKind::InvalidInput, "g is not symplectic");
    auto d = bruhat_decompose(F, g);
    if (d.p1 * d.w * d.p2 != g) fail(ErrorKind::CheckFailed, "bruhat: product does not reproduce g");
    return json{{"j", d.j}, {"p1", matj(F, d.p1)}, {"w", matj(F, d.w)}, {"p2", matj(F, d.p2)},
                {"x", scalar_str(elem(F, x_det(F, d)))}};
  });
}

template <class R>
json dense_json(const Mat<typename R::Elem>& M, bool approx) {
  json rows = json::array();
  for (int i = 0; i < M.r; ++i) {
    json row = json::array();
    for (int j = 0; j < M.c; ++j) {
      if constexpr (std::is_same_v<typename R::Elem, CycInt>)
        row.push_back(cyc(M(i, j), approx));
      else
        row.push_back(fin(M(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

// run fn with CycloRing(p) or F_{l^d} from "cyclo" / "fl:l:d"
template <class Fn>
json with_coeff(const std::string& coeff, int p, Fn&& fn) {
  if (coeff == "cyclo") return fn(CycloRing(p));
  if (coeff.rfind("fl:", 0) == 0) {
    int l = 0, d = 1;
    if (std::sscanf(coeff.c_str(), "fl:%d:%d", &l, &d) < 1 || !is_prime(l) || d < 1)
      fail(ErrorKind::InvalidInput, "bad coefficient descriptor: " + coeff);
    if (l == p) fail(ErrorKind::InvalidInput, "coefficient characteristic must differ from p");
    if ((ipow(l, d) - 1) % p) fail(ErrorKind::InvalidInput, coeff + " has no primitive " + std::to_string(p) + "-th root of unity");
    return fn(FiniteRing(l, d, p));
  }
  fail(ErrorKind::InvalidInput, "bad coefficient descriptor: " + coeff);
}

FqBase finite_field(const Common& c, const char* what) {
  auto fs = parse_field(c.field);
  if (!fs.finite) fail(ErrorKind::Unsupported, std::string(what) + " needs a finite field");
  auto ps = parse_psi(c.psi);
  if (denominator(ps.twist) != 1) fail(ErrorKind::InvalidInput, "finite-field psi twist must be an integer");
  return FqBase(fs.p, fs.f, static_cast<long long>(numerator(ps.twist)));
}

json cmd_weilrep(const Common& c, int m, const std::string& gs) {
  auto F = finite_field(c, "weilrep");
  model_cap(F, m);
  auto g = parse_matrix(F, gs);
  require_symplectic(F, g, m, "g");
  auto s = sigma_finite(F, g);
  return with_coeff(c.coeff, F.p(), [&](const auto& R) {
    using RT = std::decay_t<decltype(R)>;
    return json{{"dim", s.body.n}, {"j", s.j}, {"sign", s.sign}, {"coeff", R.name()},
                {"matrix", dense_json<RT>(sigma_dense(R, F, s), c.approx)}};
  });
}

json cmd_heisenberg(const Common& c, int m) {
  auto F = finite_field(c, "heisenberg");
  model_cap(F, m);
  auto els = h_elements(F, m);
  if (els.size() > 10000) fail(ErrorKind::Unsupported, "Heisenberg group too large to dump");
  auto S = LagrangianModel::schrodinger(F, m);
  return with_coeff(c.coeff, F.p(), [&](const auto& R) {
    using RT = std::decay_t<decltype(R)>;
    json ops = json::array();
    for (auto& h : els) {
      json w = json::array();
      for (auto& x : h.w) w.push_back(F.str(x));
      ops.push_back({{"w", w}, {"t", F.str(h.t)}, {"matrix", dense_json<RT>(S.rho(h).dense(R), c.approx)}});
    }
    return json{{"dim", S.dim()}, {"coeff", R.name()}, {"count", els.size()}, {"operators", ops}};
  });
}

json cmd_theta(const Common& c, const std::string& V, int mprime, int ell) {
  auto F = finite_field(c, "theta");
  auto P = build_dual_pair(F, gram_of(F, V), mprime);
  json rows = json::array();
  std::vector<std::pair<std::string, std::vector<int>>> chars{{"trivial", trivial_character(P)},
                                                              {"det", det_character(P)}};
  if (trivial_character(P) == det_character(P)) chars.pop_back();
  json out = with_coeff(c.coeff, F.p(), [&](const auto& R) {
    using RT = std::decay_t<decltype(R)>;
    auto omega = pair_weil(R, P);
    for (auto& [name, pi] : chars) {
      Rep<RT> lin;
      for (int v : pi) lin.push_back(Mat<typename RT::Elem>(1, 1, R.from_int(v)));
      auto T = theta_lift(R, P, omega, lin);
      bool irr = T.dim() > 0;
      if (irr) {
        if constexpr (std::is_same_v<RT, CycloRing>) {
          auto chi = character(R, T.mats);
          irr = char_inner(R, P.g2, chi, chi).is_one();
        } else {
          irr = commutant_dim_dense(R, T.mats) == 1;
        }
      }
      rows.push_back({{"pi1", name}, {"dim", T.dim()}, {"irreducible", irr}});
    }
    return json{{"pair", "O(" + std::to_string(P.n) + ") x Sp(" + std::to_string(2 * mprime) + ")"},
                {"order", P.g.size()}, {"model_dim", omega[0].r}, {"coeff", R.name()}, {"rows", rows}};
  });
  if (ell) {
    json cong = json::array();
    for (auto& [name, pi] : chars) {
      auto r = congruence_check(P, pi, ell);
      cong.push_back({{"pi1", name}, {"ell", r.ell}, {"dim0", r.dim0}, {"dim_ell", r.dimell},
                      {"irreducible0", r.irreducible0}, {"irreducible_ell", r.irreducible_ell},
                      {"brauer_match", r.brauer_match}, {"idempotent_match", r.idempotent_match && r.idempotent_h1_match}});
      if (!(r.brauer_match && r.idempotent_match && r.idempotent_h1_match && r.reduction_is_rep))
        out["check_failed"] = true;
    }
    out["congruence"] = cong;
  }
  return out;
}

json cmd_selfcheck(uint64_t seed, bool quick, const std::vector<std::string>& only) {
  SelfcheckOptions opt{seed, quick};
  json rows = json::array();
  bool all = true;
  for (auto& r : run_selfcheck(opt, only)) {
    all = all && r.pass();
    json row{{"suite", r.name}, {"pass", r.pass()}, {"checks", r.checks}, {"failures", r.failures}};
    if (!r.pass()) row["first_failure"] = r.first_failure;
    rows.push_back(row);
  }
  return json{{"seed", seed}, {"quick", quick}, {"pass", all}, {"rows", rows}};
}

// --- output ----------------------------------------------------------------

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string to_csv(const json& j) {
  std::ostringstream os;
  json rows = j.contains("rows") ? j["rows"] : json::array({j});
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
  for (size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << keys[k];
  os << "\n";
  for (auto& row : rows) {
    for (size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << (row.contains(keys[k]) ? csv_cell(row[keys[k]]) : "");
    os << "\n";
  }
  return os.str();
}

void emit(const Common& c, const json& j) {
  std::string text = c.format == "csv" ? to_csv(j) : j.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidInput, "cannot write " + c.output);
  f << text;
}

bool failed_check(const json& j) {
  if (j.contains("check_failed")) return true;
  if (j.contains("pass") && j["pass"].is_boolean()) return !j["pass"].get<bool>();
  if (j.contains("trivial") && j["trivial"].is_boolean()) return !j["trivial"].get<bool>();
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weilmod: Weil representations, metaplectic cocycles and theta lifts with exact arithmetic"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* s, bool coeff) {
    s->add_option("--field", c.field, "fq:<p>[:<f>] or qp:<p>")->capture_default_str();
    s->add_option("--psi", c.psi, "psi:level0 or psi:twist:<r>")->capture_default_str();
    if (coeff) s->add_option("--coeff", c.coeff, "cyclo or fl:<l>:<d>")->capture_default_str();
    s->add_option("--out", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    s->add_option("--output", c.output, "write to this path instead of stdout");
    s->add_flag("--approx", c.approx, "add a floating-point embedding of cyclotomic values (non-authoritative)");
  };

  std::string form = "diag:1", a, b, g1, g2, g, path = "formula", V = "diag:1";
  std::vector<std::string> suites;
  int m = 1, mprime = 1, ell = 0;
  bool exhaustive = false, rao = false, quick = false;
  uint64_t seed = 42;

  auto s_omega = app.add_subcommand("omega", "non-normalised Weil factor of a quadratic form");
  common(s_omega, false);
  s_omega->add_option("--form", form, "diag:a,b,... or a JSON gram matrix")->required();
  auto s_hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_F");
  common(s_hilbert, false);
  s_hilbert->add_option("--a", a)->required();
  s_hilbert->add_option("--b", b)->required();
  auto s_hasse = app.add_subcommand("hasse", "Hasse invariant of a quadratic form");
  common(s_hasse, false);
  s_hasse->add_option("--form", form)->required();
  auto s_coc = app.add_subcommand("cocycle", "metaplectic cocycle c(g1, g2)");
  common(s_coc, false);
  s_coc->add_option("--m", m)->capture_default_str();
  s_coc->add_option("--g1", g1, "row-major JSON matrix");
  s_coc->add_option("--g2", g2, "row-major JSON matrix");
  s_coc->add_option("--path", path, "formula or operator")->capture_default_str();
  s_coc->add_flag("--exhaustive", exhaustive, "all pairs of Sp_2(F_q)");
  s_coc->add_flag("--rao", rao, "Rao normalisation (formula path)");
  auto s_bruhat = app.add_subcommand("bruhat", "Bruhat decomposition g = p1 w_j p2");
  common(s_bruhat, false);
  s_bruhat->add_option("--g", g)->required();
  auto s_weil = app.add_subcommand("weilrep", "dump the Weil operator sigma(g)");
  common(s_weil, true);
  s_weil->add_option("--m", m)->capture_default_str();
  s_weil->add_option("--g", g)->required();
  auto s_heis = app.add_subcommand("heisenberg", "dump all Schrodinger operators rho(h)");
  common(s_heis, true);
  s_heis->add_option("--m", m)->capture_default_str();
  s_heis->add_option("--emit", c.output, "alias for --output");
  auto s_theta = app.add_subcommand("theta", "theta lifts for (O(V), Sp_2m')");
  common(s_theta, true);
  s_theta->add_option("--V", V, "diag:a,... or JSON gram matrix")->capture_default_str();
  s_theta->add_option("--mprime", mprime)->capture_default_str();
  s_theta->add_option("--ell", ell, "also run the reduction mod l congruence check");
  auto s_self = app.add_subcommand("selfcheck", "run the invariant suites");
  s_self->add_option("--seed", seed)->capture_default_str();
  s_self->add_flag("--quick", quick, "smaller random samples");
  s_self->add_option("--suite", suites, "restrict to these suites");
  s_self->add_option("--out", c.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  s_self->add_option("--output", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    json out;
    if (s_omega->parsed()) out = cmd_omega(c, form);
    else if (s_hilbert->parsed()) out = cmd_hilbert(c, a, b);
    else if (s_hasse->parsed()) out = cmd_hasse(c, form);
    else if (s_coc->parsed()) out = cmd_cocycle(c, m, g1, g2, path, exhaustive, rao);
    else if (s_bruhat->parsed()) out = cmd_bruhat(c, g);
    else if (s_weil->parsed()) out = cmd_weilrep(c, m, g);
    else if (s_heis->parsed()) out = cmd_heisenberg(c, m);
    else if (s_theta->parsed()) out = cmd_theta(c, V, mprime, ell);
    else out = cmd_selfcheck(seed, quick, suites);
    emit(c, out);
    return failed_check(out) ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::CheckFailed ? 1 : 2;
  }
}
