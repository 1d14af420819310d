#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ein/centralizer.hpp"
#include "ein/nilpotency.hpp"
#include "ein/suite.hpp"

using namespace ein;

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
}

json parse_inline_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON argument: ") + e.what());
  }
}

void emit(const json& out, bool pretty) {
  if (pretty)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out.dump() << "\n";
}

struct CommonArgs {
  int p = 1;
  int q = 2;
  bool pretty = false;
};

Signature make_sig(const CommonArgs& c) {
  try {
    return Signature(c.p, c.q);
  } catch (const domain_error& e) {
    throw input_error(std::string("bad signature: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the Einstein universe and o(p+1,q+1)"};
  app.require_subcommand(1);

  CommonArgs common;
  bool use_float = false;
  std::string point_arg, vector_arg, curve_file, basis_file, of_file, conj_file;
  std::string s_arg = "0", t_arg = "0";
  std::string cover_arg = "projective";

  auto add_sig = [&](CLI::App* cmd) {
    cmd->add_option("--p", common.p, "signature p");
    cmd->add_option("--q", common.q, "signature q");
    cmd->add_flag("--pretty", common.pretty, "indented output, aligned matrices");
  };

  auto* flow = app.add_subcommand("flow", "apply the null-translation flow to a point");
  add_sig(flow);
  flow->add_option("--point", point_arg, "homogeneous coordinates, e.g. \"[0,0,0,1,0]\"")
      ->required();
  flow->add_option("--s", s_arg, "flow time (rational)");
  flow->add_option("--cover", cover_arg, "projective | ray");

  auto* degree = app.add_subcommand("degree", "nilpotence degree of a subalgebra");
  degree->add_option("--basis", basis_file, "subalgebra JSON file")->required();
  degree->add_flag("--pretty", common.pretty);

  auto* cent = app.add_subcommand("centralizer", "centralizer structure report");
  add_sig(cent);
  cent->add_option("--of", of_file, "subalgebra JSON file (default: the translation T)");

  auto* hol = app.add_subcommand("holonomy", "holonomy matrix h(s,t) and reparametrization");
  add_sig(hol);
  hol->add_option("--s", s_arg, "flow time (rational)");
  hol->add_option("--t", t_arg, "geodesic parameter (rational)");
  hol->add_option("--conjugator", conj_file, "group element JSON file (must lie in S)");

  auto* chart = app.add_subcommand("chart", "stereographic chart in and out");
  add_sig(chart);
  bool project = false, unproject = false;
  chart->add_flag("--project", project, "Ein point -> chart vector");
  chart->add_flag("--unproject", unproject, "chart vector -> Ein point");
  chart->add_option("--point", point_arg, "homogeneous coordinates (with --project)");
  chart->add_option("--vector", vector_arg, "chart coordinates (with --unproject)");

  auto* limit = app.add_subcommand("limit", "forward flow limit of a point");
  add_sig(limit);
  limit->add_option("--point", point_arg, "homogeneous coordinates")->required();
  limit->add_flag("--float", use_float, "float path with near-fixed-set rejection");

  auto* dev = app.add_subcommand("develop", "development of a piecewise-geodesic curve");
  add_sig(dev);
  dev->add_option("--curve", curve_file, "curve JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run the seeded verification suites");
  std::vector<std::string> suite_names;
  std::string signatures_arg = "1,2;1,3;2,2";
  std::uint64_t seed = 42;
  int trials = 100, threads = 0;
  bool timings = false;
  verify->add_option("--suite", suite_names, "suite subset (default: all)");
  verify->add_option("--trials", trials, "randomized trials per check");
  verify->add_option("--seed", seed, "64-bit seed")->envname("EINCTL_SEED");
  verify->add_option("--signatures", signatures_arg, "e.g. \"1,2;1,3;2,2\"");
  verify->add_option("--threads", threads, "0 = default team, 1 = serial");
  verify->add_flag("--timings", timings, "include wall-clock timings (non-deterministic)");
  verify->add_flag("--pretty", common.pretty);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // CLI11 usage problems are input errors
  }

  try {
    if (*flow) {
      const Signature sig = make_sig(common);
      const Cover cover = cover_arg == "ray" ? Cover::ray : Cover::projective;
      EinPoint y(sig, point_from_json(parse_inline_json(point_arg), cover));
      EinPoint out = tau_flow(rat_parse(s_arg), y);
      emit(json{{"point", point_to_json(out.point)}}, common.pretty);
    } else if (*degree) {
      Subalgebra h = subalgebra_from_json(load_json_file(basis_file));
      LowerCentralSeries s = lower_central_series(h);
      json dims = json::array();
      for (const auto& term : s.terms) dims.push_back(term.dim());
      json out{{"degree", s.degree ? json(*s.degree) : json("not nilpotent")},
               {"term_dimensions", dims}};
      emit(out, common.pretty);
    } else if (*cent) {
      const Signature sig = make_sig(common);
      json out;
      if (of_file.empty()) {
        Subalgebra fam = ctau_basis(sig);
        json basis = json::array(), params = json::array();
        for (const auto& b : fam.basis) {
          basis.push_back(mat_to_json(b.mat));
          CTauElement e = disassemble(b);
          params.push_back(json{{"a", rat_to_json(e.a)},
                                {"b", rat_to_json(e.b)},
                                {"c", rat_to_json(e.c)},
                                {"s", rat_to_json(e.s)},
                                {"x", vec_to_json(e.x)},
                                {"y", vec_to_json(e.y)},
                                {"M", mat_to_json(e.m)}});
        }
        out = json{{"of", "T"},
                   {"dimension", fam.dim()},
                   {"basis", basis},
                   {"parameters", params}};
      } else {
        Subalgebra gens = subalgebra_from_json(load_json_file(of_file));
        check_domain(gens.sig == sig, "file signature disagrees with --p/--q");
        Subalgebra c = centralizer(sig, gens.basis);
        json basis = json::array();
        for (const auto& b : c.basis) basis.push_back(mat_to_json(b.mat));
        out = json{{"of", of_file}, {"dimension", c.dim()}, {"basis", basis}};
      }
      if (common.pretty) {
        std::cout << "dimension: " << out["dimension"] << "\n";
        for (const auto& b : out["basis"])
          std::cout << pretty_matrix(mat_from_json(b)) << "\n";
      } else {
        emit(out, false);
      }
    } else if (*hol) {
      const Signature sig = make_sig(common);
      const Rat s = rat_parse(s_arg), t = rat_parse(t_arg);
      HolonomyFactorization fac =
          conj_file.empty()
              ? base_factorization(sig, s)
              : conjugated_factorization(group_from_json(load_json_file(conj_file)), s);
      GroupElement h = fac.path(t);
      check_internal(fac.verify(t), "holonomy factorization failed to certify");
      json out{{"reparam", {{"kind", "mobius"}, {"s", rat_to_json(s)}}},
               {"c_of_t", rat_to_json(fac.reparam(t))},
               {"pole", fac.pole() ? json(rat_to_json(*fac.pole())) : json()},
               {"matrix", mat_to_json(h.mat)}};
      if (common.pretty) {
        std::cout << "c(t) = " << rat_str(fac.reparam(t)) << "\n"
                  << pretty_matrix(h.mat);
      } else {
        emit(out, false);
      }
    } else if (*chart) {
      const Signature sig = make_sig(common);
      if (project == unproject)
        throw input_error("chart needs exactly one of --project / --unproject");
      if (project) {
        EinPoint x(sig, point_from_json(parse_inline_json(point_arg)));
        emit(json{{"vector", vec_to_json(stereo_forward(x))}}, common.pretty);
      } else {
        Vec v = vec_from_json(parse_inline_json(vector_arg));
        EinPoint out = stereo_inverse(sig, v);
        emit(json{{"point", point_to_json(out.point)}}, common.pretty);
      }
    } else if (*limit) {
      const Signature sig = make_sig(common);
      if (use_float) {
        Vec v = vec_from_json(parse_inline_json(point_arg));
        std::vector<double> y;
        for (const auto& c : v) y.push_back(rat_double(c));
        auto lim = tau_limit_double(sig, y);
        emit(json{{"point_float", lim}}, common.pretty);
      } else {
        EinPoint y(sig, point_from_json(parse_inline_json(point_arg)));
        EinPoint out = tau_limit(y);
        check_internal(attractor_vertex(y) == out, "limit/vertex disagreement");
        emit(json{{"point", point_to_json(out.point)}}, common.pretty);
      }
    } else if (*dev) {
      const Signature sig = make_sig(common);
      PiecewiseCurve curve = curve_from_json(sig, load_json_file(curve_file));
      GroupElement endpoint = develop(curve);
      if (common.pretty) {
        std::cout << pretty_matrix(endpoint.mat);
      } else {
        emit(json{{"endpoint", mat_to_json(endpoint.mat)}}, false);
      }
    } else if (*verify) {
      SuiteConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.threads = threads;
      if (!suite_names.empty()) cfg.suites = suite_names;
      cfg.signatures.clear();
      std::stringstream ss(signatures_arg);
      std::string item;
      while (std::getline(ss, item, ';')) {
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw input_error("bad signature list: " + item);
        try {
          cfg.signatures.emplace_back(std::stoi(item.substr(0, comma)),
                                      std::stoi(item.substr(comma + 1)));
        } catch (const std::exception& e) {
          throw input_error(std::string("bad signature list: ") + e.what());
        }
      }
      Report report = run_suite(cfg);
      emit(report_to_json(report, timings), common.pretty);
      if (report.failed > 0) return 5;
    }
    return 0;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
