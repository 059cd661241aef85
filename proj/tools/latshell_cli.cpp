// latshell command-line front end: catalog inspection, shell enumeration,
// kissing counts, class partitions, adjacency statistics, densities and the
// verify suite. Exit codes for `verify`: 0 all pass, 1 any fail, 2 internal
// error.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "latshell/io.hpp"
#include "latshell/verify.hpp"

using namespace latshell;

namespace {

int default_workers() {
  if (const char* env = std::getenv("LATSHELL_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Catalog name or a path to a lattice JSON file.
Lattice resolve_lattice(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_lattice(arg);
  return catalog(arg);
}

std::string decimal(const Rational& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << to_double(r);
  return out.str();
}

json shell_to_json(const Lattice& l, const ShellResult& res) {
  json j;
  j["lattice"] = l.name();
  j["r2_lo"] = to_string(res.spec.r2_lo);
  j["r2_hi"] = to_string(res.spec.r2_hi);
  j["count"] = res.count();
  json vecs = json::array();
  for (size_t i = 0; i < res.count(); ++i) {
    json v;
    v["coeffs"] = res.vectors[i];
    v["norm2"] = to_string(res.norms2[i]);
    vecs.push_back(std::move(v));
  }
  j["vectors"] = std::move(vecs);
  return j;
}

void print_shell(const Lattice& l, const ShellResult& res, bool as_json, bool as_csv) {
  if (as_json) {
    std::cout << shell_to_json(l, res).dump(2) << "\n";
    return;
  }
  if (as_csv) {
    for (size_t c = 0; c < l.rank(); ++c) std::cout << "x" << c << ",";
    std::cout << "norm2\n";
    for (size_t i = 0; i < res.count(); ++i) {
      for (long long v : res.vectors[i]) std::cout << v << ",";
      std::cout << to_string(res.norms2[i]) << "\n";
    }
    return;
  }
  for (size_t i = 0; i < res.count(); ++i) {
    std::cout << "(";
    for (size_t c = 0; c < res.vectors[i].size(); ++c)
      std::cout << (c ? "," : "") << res.vectors[i][c];
    std::cout << ")  norm2 = " << to_string(res.norms2[i]) << "\n";
  }
  std::cout << res.count() << " vectors with norm^2 in [" << to_string(res.spec.r2_lo) << ", "
            << to_string(res.spec.r2_hi) << "]\n";
}

RVec parse_center(const std::string& text, size_t rank) {
  RVec center;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) center.push_back(parse_rational(token));
  if (center.size() != rank) throw error("center needs one coefficient per basis vector");
  return center;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice shell enumeration and kissing numbers"};
  app.require_subcommand(1);
  int workers = default_workers();
  app.add_option("--workers", workers, "worker count (1 forces serial)")->capture_default_str();

  std::string name, r2_lo = "4", r2_hi = "12", preset, gauge_name = "l1", volume = "1";
  std::string center_text, r2 = "4", gamma2 = "1", filter, out_path;
  bool as_json = false, as_csv = false, with_oracle = false;
  int mod_k = 3;

  auto* lat = app.add_subcommand("lattice", "catalog access");
  auto* lat_list = lat->add_subcommand("list", "list catalog names");
  auto* lat_show = lat->add_subcommand("show", "print a lattice as JSON");
  lat_show->add_option("name", name)->required();
  auto* lat_save = lat->add_subcommand("save", "write a lattice to a JSON file");
  lat_save->add_option("name", name)->required();
  lat_save->add_option("path", out_path)->required();

  auto* shell = app.add_subcommand("shell", "enumerate a norm shell");
  shell->add_option("lattice", name)->required();
  shell->add_option("--r2-lo", r2_lo, "lower squared norm")->capture_default_str();
  shell->add_option("--r2-hi", r2_hi, "upper squared norm")->capture_default_str();
  shell->add_flag("--json", as_json);
  shell->add_flag("--csv", as_csv);

  auto* kiss = app.add_subcommand("kiss", "count minimal vectors (norm^2 must be 4)");
  kiss->add_option("lattice", name)->required();

  auto* gkiss = app.add_subcommand("gkiss", "count the shell [4, r2-hi]");
  gkiss->add_option("lattice", name)->required();
  gkiss->add_option("--r2-hi", r2_hi)->capture_default_str();
  gkiss->add_option("--alpha-preset", preset, "sqrt3 -> 12, sqrt2 -> 8, r23 -> 32/3");

  auto* gkg = app.add_subcommand("gkiss-gauge", "count gauge == 2 vectors");
  gkg->add_option("lattice", name)->required();
  gkg->add_option("--gauge", gauge_name, "l1 | cuboct")->capture_default_str();
  gkg->add_flag("--json", as_json);

  auto* classes = app.add_subcommand("classes", "modulo-k class histogram of a shell");
  classes->add_option("lattice", name)->required();
  classes->add_option("--k", mod_k, "modulus")->capture_default_str();
  classes->add_option("--r2-hi", r2_hi)->capture_default_str();
  classes->add_option("--gauge", gauge_name, "use the gauge == 2 shell instead (l1 | cuboct)");
  classes->add_flag("--json", as_json);
  classes->add_flag("--csv", as_csv);

  auto* tstats = app.add_subcommand("tstats", "minimal-vector adjacency statistics");
  tstats->add_option("lattice", name)->required();
  tstats->add_flag("--json", as_json);
  tstats->add_flag("--csv", as_csv);

  auto* dens = app.add_subcommand("density", "body volume / covolume, exact");
  dens->add_option("lattice", name)->required();
  dens->add_option("--volume", volume, "body volume as a rational")->required();
  dens->add_flag("--json", as_json);

  auto* ball = app.add_subcommand("ball-count", "lattice points in a ball around a center");
  ball->add_option("lattice", name)->required();
  ball->add_option("--center", center_text, "comma-separated basis coefficients")->required();
  ball->add_option("--r2", r2, "squared radius")->capture_default_str();

  auto* svp = app.add_subcommand("svp-count", "vectors within gamma * minimal length");
  svp->add_option("lattice", name)->required();
  svp->add_option("--gamma2", gamma2, "squared approximation factor")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "replay all reference values");
  verify->add_option("filter", filter, "id prefix filter");
  verify->add_flag("--json", as_json);
  verify->add_flag("--csv", as_csv);
  verify->add_flag("--with-oracle", with_oracle, "include box-oracle cross-checks");

  // let `--workers` and friends appear after the subcommand name
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lat_list) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      std::cout << "(families Zn/An/Dn take any rank; prefix sqrt2 doubles the Gram;\n"
                   " D5v/D6v accept a glue parameter, e.g. D5v(1/4))\n";
      return 0;
    }
    if (*lat_show) {
      std::cout << lattice_to_json(resolve_lattice(name)).dump(2) << "\n";
      return 0;
    }
    if (*lat_save) {
      save_lattice(resolve_lattice(name), out_path);
      return 0;
    }
    if (*shell) {
      Lattice l = resolve_lattice(name);
      ShellResult res = shell_vectors(l, {parse_rational(r2_lo), parse_rational(r2_hi)}, workers);
      print_shell(l, res, as_json, as_csv);
      return 0;
    }
    if (*kiss) {
      std::cout << kissing_count(resolve_lattice(name), workers) << "\n";
      return 0;
    }
    if (*gkiss) {
      Rational hi = parse_rational(r2_hi);
      if (preset == "sqrt3")
        hi = 12;
      else if (preset == "sqrt2")
        hi = 8;
      else if (preset == "r23")
        hi = Rational(32, 3);
      else if (!preset.empty())
        throw error("unknown preset '" + preset + "'");
      std::cout << generalized_kissing_count(resolve_lattice(name), hi, workers) << "\n";
      return 0;
    }
    if (*gkg) {
      Lattice l = resolve_lattice(name);
      Gauge g = gauge_name == "cuboct" ? Gauge::cuboctahedron()
                                       : Gauge::cross_polytope(static_cast<int>(l.rank()));
      if (as_json) {
        GaugeShell s = gauge_shell(l, g, workers);
        json j;
        j["lattice"] = l.name();
        j["gauge"] = gauge_name;
        j["packing"] = s.packing_ok;
        j["count"] = s.coeffs.size();
        json pts = json::array();
        for (size_t i = 0; i < s.coeffs.size(); ++i) {
          json p;
          p["coeffs"] = s.coeffs[i];
          json amb = json::array();
          for (const auto& c : s.ambient[i]) amb.push_back(to_string(c));
          p["ambient"] = std::move(amb);
          pts.push_back(std::move(p));
        }
        j["vectors"] = std::move(pts);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << gauge_kissing_count(l, g, workers) << "\n";
      }
      return 0;
    }
    if (*classes) {
      Lattice l = resolve_lattice(name);
      ClassPartition p;
      if (classes->count("--gauge")) {
        Gauge g = gauge_name == "cuboct" ? Gauge::cuboctahedron()
                                         : Gauge::cross_polytope(static_cast<int>(l.rank()));
        p = mod_classes(gauge_shell(l, g, workers), mod_k);
      } else {
        p = mod_classes(shell_vectors(l, {Rational(4), parse_rational(r2_hi)}, workers), mod_k);
      }
      if (as_json) {
        json j;
        j["lattice"] = l.name();
        j["k"] = p.k;
        j["zero_class_members"] = p.zero_class.size();
        json h = json::object();
        for (const auto& [size, cnt] : p.histogram) h[std::to_string(size)] = cnt;
        j["histogram"] = std::move(h);
        std::cout << j.dump(2) << "\n";
      } else if (as_csv) {
        std::cout << "class_size,classes\n";
        for (const auto& [size, cnt] : p.histogram) std::cout << size << "," << cnt << "\n";
      } else {
        std::cout << "modulo-" << p.k << " classes (" << p.member_total() << " vectors, "
                  << p.zero_class.size() << " in the zero class)\n";
        for (const auto& [size, cnt] : p.histogram)
          std::cout << "  size " << size << ": " << cnt << " classes\n";
      }
      return 0;
    }
    if (*tstats) {
      AdjacencyStats s = adjacency_stats(resolve_lattice(name), workers);
      if (as_json) {
        json j;
        j["kissing"] = s.kissing;
        j["t_max"] = s.t_max;
        j["t_second"] = s.t_second;
        j["sv2"] = s.sv2_count;
        j["triples"] = s.triple_count;
        std::cout << j.dump(2) << "\n";
      } else if (as_csv) {
        std::cout << "kissing,t_max,t_second,sv2,triples\n"
                  << s.kissing << "," << s.t_max << "," << s.t_second << "," << s.sv2_count << ","
                  << s.triple_count << "\n";
      } else {
        std::cout << "kissing " << s.kissing << ", t_max " << s.t_max << ", t_second "
                  << s.t_second << ", sv2 " << s.sv2_count << ", triples " << s.triple_count
                  << "\n";
      }
      return 0;
    }
    if (*dens) {
      DensityResult d = density(resolve_lattice(name), parse_rational(volume));
      if (as_json) {
        json j;
        j["exact"] = d.exact;
        j[d.exact ? "density" : "density_squared"] = to_string(d.value);
        j["decimal"] = decimal(d.value);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (d.exact ? "density " : "density^2 ") << to_string(d.value) << " ("
                  << decimal(d.value) << ")\n";
      }
      return 0;
    }
    if (*ball) {
      Lattice l = resolve_lattice(name);
      std::cout << ball_count(l, parse_center(center_text, l.rank()), parse_rational(r2), workers)
                << "\n";
      return 0;
    }
    if (*svp) {
      std::cout << svp_shell_count(resolve_lattice(name), parse_rational(gamma2), workers) << "\n";
      return 0;
    }
    if (*verify) {
      auto cases = run_verify({filter, with_oracle, workers});
      if (as_json)
        std::cout << verify_json(cases).dump(2) << "\n";
      else if (as_csv)
        std::cout << verify_csv(cases);
      else
        std::cout << verify_table(cases);
      return all_pass(cases) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return *verify ? 2 : 1;
  }
  return 0;
}
