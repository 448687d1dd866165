#include "lorentz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorentz/cones.hpp"
#include "lorentz/io.hpp"
#include "lorentz/kacmoody.hpp"
#include "lorentz/qseries.hpp"
#include "lorentz/vinberg.hpp"
#include "lorentz/weylstruct.hpp"

namespace lorentz::cli {

namespace {

using json = nlohmann::ordered_json;

json jint(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json jrat(const Rational& v) { return v.get_str(); }

json jvec(std::span<const Integer> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jvec(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jrat(x));
  return a;
}

json jcoeffs(const km::RootCoeffs& c) {
  json a = json::array();
  for (auto x : c) a.push_back(x);
  return a;
}

json jmat(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(jint(m(i, k)));
    a.push_back(row);
  }
  return a;
}

json jlattice(const Lattice& l) { return json{{"name", l.name()}, {"gram", jmat(l.gram())}}; }

json jroots(const RootSet& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back(jvec(r));
  return a;
}

struct Common {
  std::string lattice;
  std::string output;
  int threads = 1;
};

// One subcommand: the options it owns and the function that produces its
// report. run() fills lattice/config/result.
struct Command {
  CLI::App* app = nullptr;
  json config = json::object();
  std::function<json(json& lattice_field)> run;
};

Lattice need_lattice(const Common& c) { return io::load_lattice(c.lattice); }

RootSet need_roots(const std::string& text, const Lattice& l) {
  auto roots = io::parse_vector_list(text);
  for (const auto& r : roots)
    if (r.size() != l.rank()) throw DimensionMismatch("root " + to_string(r) + " has wrong length for the lattice");
  return roots;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflective hyperbolic lattices, Vinberg chambers and Lorentzian Kac-Moody root data", "lorentz-roots"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--output,-o", common.output, "Write the JSON report to this file");
  app.add_option("--threads", common.threads, "Thread budget (computations are sequential)")
      ->check(CLI::PositiveNumber);

  std::vector<Command> commands;
  auto lattice_option = [&](CLI::App* sub) {
    sub->add_option("--lattice,-l", common.lattice, "Lattice JSON file")->required();
  };

  // info
  {
    Command c;
    c.app = app.add_subcommand("info", "Lattice invariants");
    lattice_option(c.app);
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      auto inv = invariants(l);
      json smith = json::array();
      for (const auto& d : inv.smith_divisors) smith.push_back(jint(d));
      return json{{"rank", l.rank()},
                  {"signature", json::array({inv.signature.positive, inv.signature.negative})},
                  {"even", inv.even},
                  {"determinant", jint(inv.determinant)},
                  {"smith_divisors", smith},
                  {"exponent", jint(inv.exponent)}};
    };
    commands.push_back(std::move(c));
  }

  // vinberg
  std::string controller, norms, max_key = "1024", congruence;
  std::size_t max_roots = 64;
  bool strict_bound = false;
  {
    Command c;
    c.app = app.add_subcommand("vinberg", "Vinberg's algorithm from a timelike controller");
    lattice_option(c.app);
    c.app->add_option("--controller,-c", controller, "Timelike controller h, e.g. 1,1,1")->required();
    c.app->add_option("--norms", norms, "Allowed root norms, e.g. 2,4")->required();
    c.app->add_option("--max-key", max_key, "Largest squared height S(h,d)^2/S(d,d) examined");
    c.app->add_option("--max-roots", max_roots, "Stop after this many accepted roots");
    c.app->add_option("--congruence", congruence, "JSON file {\"sublattice\": columns, \"residues\": [...]}");
    c.app->add_flag("--strict-bound", strict_bound, "Use the strict form of the Gram bound");
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      IntVec h = io::parse_int_list(controller);
      vinberg::RootFilter filter;
      filter.norms = io::parse_int_list(norms);
      if (!congruence.empty()) {
        std::ifstream in(congruence);
        if (!in) throw io::ParseError("cannot read congruence file " + congruence);
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw io::ParseError(std::string("congruence file: ") + e.what());
        }
        vinberg::Congruence cg;
        auto cols = j.at("sublattice").get<std::vector<std::vector<long>>>();
        cg.sublattice = IntMatrix(l.rank(), cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
          if (cols[k].size() != l.rank()) throw DimensionMismatch("congruence column of wrong length");
          for (std::size_t i = 0; i < l.rank(); ++i) cg.sublattice(i, k) = Integer(cols[k][i]);
        }
        for (const auto& r : j.at("residues").get<std::vector<std::vector<long>>>()) {
          IntVec v;
          for (auto x : r) v.push_back(Integer(x));
          cg.residues.push_back(v);
        }
        filter.congruence = cg;
      }
      Rational mk;
      try {
        mk = parse_rational(max_key);
      } catch (const std::exception&) {
        throw io::ParseError("--max-key is not a rational number: " + max_key);
      }
      vinberg::Limits limits{{mk.get_num(), mk.get_den()}, max_roots};
      auto report = vinberg::run(l, h, filter, limits);
      json keys = json::array();
      for (const auto& k : report.keys) keys.push_back(jrat(k.value()));
      json res{{"roots", jroots(report.accepted)},
               {"keys", keys},
               {"gram", jmat(report.gram)},
               {"terminated", report.terminated},
               {"exhausted", report.exhausted}};
      res["finite_volume"] = report.terminated;
      if (!report.accepted.empty()) {
        auto gb = vinberg::gram_bound_check(l, report.accepted, strict_bound);
        json viol = json::array();
        for (auto [i, j] : gb.violations) viol.push_back(json::array({i, j}));
        json subset = nullptr;
        if (gb.spanning_subset) subset = *gb.spanning_subset;
        res["gram_bound"] = json{{"violations", viol}, {"spanning_subset", subset}};
      }
      return res;
    };
    commands.push_back(std::move(c));
  }

  // weyl
  std::string roots_text, norm_bound, window_aux;
  std::string window_max;
  {
    Command c;
    c.app = app.add_subcommand("weyl", "Lattice Weyl vector of a root set");
    lattice_option(c.app);
    c.app->add_option("--roots,-r", roots_text, "Roots separated by ';', e.g. 1,0,0;0,1,0")->required();
    c.app->add_option("--norm-bound", norm_bound, "Also list roots a with S(rho,a) = -S(a,a)/2 up to this norm");
    c.app->add_option("--window-aux", window_aux, "Timelike vector bounding the search for isotropic rho");
    c.app->add_option("--window-max", window_max, "Largest |S(aux,a)| searched");
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      RootSet roots = need_roots(roots_text, l);
      auto wd = weyl::lattice_weyl_vector(l, roots);
      json res{{"kind", std::string(weyl::name(wd.kind))}};
      res["rho"] = wd.rho ? jvec(std::span<const Rational>(*wd.rho)) : json(nullptr);
      res["rho_norm"] = wd.rho ? jrat(wd.rho_norm) : json(nullptr);
      if (!norm_bound.empty()) {
        if (!wd.rho) throw DomainError("weyl: no Weyl vector, candidate roots are undefined");
        std::optional<weyl::SearchWindow> window;
        if (!window_aux.empty() || !window_max.empty()) {
          if (window_aux.empty() || window_max.empty())
            throw io::ParseError("--window-aux and --window-max must be given together");
          window = weyl::SearchWindow{io::parse_int_list(window_aux), io::parse_int_list(window_max).at(0)};
        }
        auto nb = io::parse_int_list(norm_bound);
        if (nb.size() != 1) throw io::ParseError("--norm-bound takes one integer");
        res["candidates"] = jroots(weyl::candidate_roots_for_weyl_vector(l, *wd.rho, nb[0], window));
      }
      return res;
    };
    commands.push_back(std::move(c));
  }

  // classify
  {
    Command c;
    c.app = app.add_subcommand("classify", "Symmetry group and elliptic/parabolic type of a chamber");
    lattice_option(c.app);
    c.app->add_option("--roots,-r", roots_text, "Walls separated by ';'")->required();
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      RootSet roots = need_roots(roots_text, l);
      auto sym = weyl::symmetry_group(l, roots);
      auto cls = weyl::classify_chamber(l, roots, sym);
      json gens = json::array();
      for (const auto& g : sym.generators) gens.push_back(jmat(g.matrix));
      json perms = json::array();
      for (const auto& e : sym.elements) perms.push_back(e.permutation);
      json res;
      res["symmetry"] = json{{"order", sym.order ? json(*sym.order) : json(nullptr)},
                             {"generators", gens},
                             {"permutations", perms}};
      res["kind"] = std::string(weyl::name(cls.kind));
      res["cusp"] = cls.cusp ? jvec(*cls.cusp) : json(nullptr);
      return res;
    };
    commands.push_back(std::move(c));
  }

  // cartan
  bool permissive = false;
  {
    Command c;
    c.app = app.add_subcommand("cartan", "Generalized Cartan matrix of a root set");
    lattice_option(c.app);
    c.app->add_option("--roots,-r", roots_text, "Simple roots separated by ';'")->required();
    c.app->add_flag("--permissive", permissive, "Accept decomposable or non-Lorentzian data");
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      RootSet roots = need_roots(roots_text, l);
      auto cm = km::cartan(l, roots, {!permissive});
      return json{{"a", jmat(cm.a)},
                  {"d", jvec(std::span<const Rational>(cm.d))},
                  {"b", jmat(cm.b)},
                  {"indecomposable", cm.indecomposable},
                  {"lorentzian", cm.lorentzian}};
    };
    commands.push_back(std::move(c));
  }

  // denominator
  int height_bound = 6;
  {
    Command c;
    c.app = app.add_subcommand("denominator", "Weyl-Kac denominator identity and root multiplicities");
    lattice_option(c.app);
    c.app->add_option("--roots,-r", roots_text, "Simple roots separated by ';'")->required();
    c.app->add_option("--n", height_bound, "Height truncation")->check(CLI::NonNegativeNumber);
    c.app->add_flag("--permissive", permissive, "Accept decomposable or non-Lorentzian data");
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      RootSet roots = need_roots(roots_text, l);
      auto datum = km::make_root_datum(l, roots, {!permissive});
      auto elems = km::weyl_elements(datum, height_bound);
      auto sum = km::sum_side(elems, datum.rank(), height_bound);
      auto table = km::solve_multiplicities(datum, height_bound);
      json series = json::array();
      for (const auto& [k, v] : sum.terms) series.push_back(json{{"exponent", jcoeffs(k)}, {"coeff", jint(v)}});
      std::vector<std::pair<km::RootCoeffs, Integer>> rows(table.mults.begin(), table.mults.end());
      std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (km::height(a.first) != km::height(b.first)) return km::height(a.first) < km::height(b.first);
        return a.first < b.first;
      });
      json mults = json::array();
      for (const auto& [k, m] : rows) {
        IntVec v = datum.to_lattice(k);
        mults.push_back(json{{"root", jvec(v)},
                             {"coeffs", jcoeffs(k)},
                             {"norm", jint(l.norm(v))},
                             {"mult", jint(m)},
                             {"real", table.real.at(k)}});
      }
      json res{{"weyl_elements", elems.size()},
               {"sum_side", series},
               {"multiplicities", mults},
               {"residual_zero", table.residual_zero},
               {"w_invariant", km::check_w_invariance(datum, table)}};
      res["anti_invariance"] =
          datum.weyl_data.rho ? json(km::anti_invariance_check(datum, elems, height_bound)) : json(nullptr);
      return res;
    };
    commands.push_back(std::move(c));
  }

  // qseries
  std::optional<long> eta_power;
  std::string cusp_direction, coeffs_text;
  std::optional<std::size_t> series_n;
  {
    Command c;
    c.app = app.add_subcommand("qseries", "Eta products and the cusp identity along an isotropic ray");
    auto* ep = c.app->add_option("--eta-power", eta_power, "Exponent e of prod (1-q^n)^e");
    auto* ci = c.app->add_option("--cusp-identity", cusp_direction, "tau2m or m2tau")
                   ->check(CLI::IsMember({"tau2m", "m2tau"}));
    c.app->add_option("--coeffs", coeffs_text, "Input values at t = 1, 2, ... (comma separated)");
    c.app->add_option("--n", series_n, "Truncation");
    ep->excludes(ci);
    c.run = [&](json& lat) -> json {
      lat = nullptr;
      if (eta_power) {
        if (!series_n) throw io::ParseError("--eta-power needs --n");
        return jvec(qs::eta_power(*eta_power, *series_n).coefficients());
      }
      if (cusp_direction.empty()) throw io::ParseError("qseries needs --eta-power or --cusp-identity");
      if (coeffs_text.empty()) throw io::ParseError("--cusp-identity needs --coeffs");
      IntVec in = io::parse_int_list(coeffs_text);
      std::size_t n = series_n.value_or(in.size());
      auto dir = cusp_direction == "tau2m" ? qs::Direction::TauToM : qs::Direction::MToTau;
      return jvec(qs::cusp_identity(dir, in, n));
    };
    commands.push_back(std::move(c));
  }

  // family
  std::string phi_text, e0_text, f01_text, f02_text;
  long family_k = 2, family_window = 6;
  {
    Command c;
    c.app = app.add_subcommand("family", "Finite window of the root family P_k generated by a parabolic isometry");
    lattice_option(c.app);
    c.app->add_option("--phi", phi_text, "Isometry matrix, rows separated by ';' (columns are basis images)")
        ->required();
    c.app->add_option("--e0", e0_text, "Root repeated at t != 0 mod k")->required();
    c.app->add_option("--f01", f01_text, "First root repeated at t = 0 mod k")->required();
    c.app->add_option("--f02", f02_text, "Second root repeated at t = 0 mod k")->required();
    c.app->add_option("--k", family_k, "Period")->check(CLI::PositiveNumber);
    c.app->add_option("--window", family_window, "Largest |t|")->check(CLI::NonNegativeNumber);
    c.run = [&](json& lat) {
      Lattice l = need_lattice(common);
      lat = jlattice(l);
      Isometry phi{io::parse_matrix(phi_text)};
      auto s = weyl::build_pk_sample(l, phi, io::parse_int_list(e0_text), io::parse_int_list(f01_text),
                                     io::parse_int_list(f02_text), family_k, family_window);
      json res{{"roots", jroots(s.roots)}, {"shift", s.shift}, {"seed", s.seed}, {"acceptable", s.acceptable}};
      res["rho"] = s.rho ? jvec(std::span<const Rational>(*s.rho)) : json(nullptr);
      res["weyl_property"] = s.weyl_property;
      res["non_obtuse"] = s.non_obtuse;
      res["offending"] = s.offending ? json::array({s.offending->first, s.offending->second}) : json(nullptr);
      return res;
    };
    commands.push_back(std::move(c));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lorentz-roots: " << e.what() << "\n";
    return 2;
  }

  for (auto& c : commands) {
    if (!c.app->parsed()) continue;
    json config = json::object();
    for (const CLI::Option* opt : c.app->get_options()) {
      if (opt->get_name() == "--help" || opt->count() == 0) continue;
      std::string key = opt->get_name().substr(opt->get_name().find_first_not_of('-'));
      auto res = opt->results();
      config[key] = res.size() == 1 ? json(res.front()) : json(res);
    }
    config["threads"] = common.threads;
    json doc;
    try {
      json lat = nullptr;
      json result = c.run(lat);
      doc["command"] = c.app->get_name();
      doc["lattice"] = lat;
      doc["config"] = config;
      doc["result"] = result;
    } catch (const io::ParseError& e) {
      err << "lorentz-roots: " << e.what() << "\n";
      return 2;
    } catch (const DomainError& e) {
      err << "lorentz-roots " << c.app->get_name() << ": " << e.what() << "\n";
      return 1;
    } catch (const std::out_of_range& e) {
      err << "lorentz-roots: malformed argument (" << e.what() << ")\n";
      return 2;
    }
    const std::string text = doc.dump(2) + "\n";
    if (common.output.empty()) {
      out << text;
    } else {
      std::ofstream f(common.output, std::ios::binary);
      if (!f) {
        err << "lorentz-roots: cannot write " << common.output << "\n";
        return 2;
      }
      f << text;
    }
    return 0;
  }
  err << "lorentz-roots: no subcommand\n";
  return 2;
}

}  // namespace lorentz::cli
