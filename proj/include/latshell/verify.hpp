#pragma once

// The `verify` command: replays every reference count, bound and density the
// library is expected to reproduce, as machine-checked pass/fail cases.
// Expected values are embedded as exact literals with a source note; output
// is deterministic (byte-identical across runs and worker counts).

#include <functional>
#include <future>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latshell/analysis.hpp"
#include "latshell/oracle.hpp"

namespace latshell {

struct VerifyCase {
  std::string id;
  std::string description;
  std::string source;    // how the expected value is known
  std::string expected;  // exact literal
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  std::string filter;      // id prefix; empty runs everything
  bool with_oracle = false;
  int workers = 1;
};

namespace detail {

struct CaseSpec {
  std::string id;
  std::string description;
  std::string source;
  std::string expected;
  std::function<std::string()> compute;
};

inline std::string pass_or(const bool ok, const std::string& detail) {
  return ok ? "pass" : "fail(" + detail + ")";
}

inline oracle::Gram to_oracle_gram(const Lattice& l) {
  oracle::Gram g(l.rank(), std::vector<Rational>(l.rank()));
  for (size_t i = 0; i < l.rank(); ++i)
    for (size_t j = 0; j < l.rank(); ++j) g[i][j] = l.gram()(i, j);
  return g;
}

inline std::vector<CaseSpec> verify_cases(bool with_oracle) {
  std::vector<CaseSpec> cases;
  auto add = [&cases](std::string id, std::string desc, std::string source, std::string expected,
                      std::function<std::string()> compute) {
    cases.push_back({std::move(id), std::move(desc), std::move(source), std::move(expected),
                     std::move(compute)});
  };

  const char* sphere7[] = {"sqrt2A2", "sqrt2A3", "sqrt2D4", "sqrt2D5",
                           "sqrt2E6", "sqrt2E7", "sqrt2E8"};
  const long long kiss7[] = {6, 12, 24, 40, 72, 126, 240};
  const long long shell7[] = {12, 42, 144, 370, 1062, 2954, 9120};
  const char* kiss_src = "classical table of lattice kissing numbers";
  const char* shell_src = "reference shell counts at squared outer radius 12";

  // minimal-vector counts
  for (int i = 0; i < 7; ++i) {
    std::string n = sphere7[i];
    add("watson.kiss.n" + std::to_string(i + 2), "minimal-vector count of " + n, kiss_src,
        std::to_string(kiss7[i]), [n] { return std::to_string(kissing_count(catalog(n))); });
  }

  // shell counts at squared radius 12
  for (int i = 0; i < 7; ++i) {
    std::string n = sphere7[i];
    add("shell12.n" + std::to_string(i + 2), "vectors of " + n + " with norm^2 in [4,12]",
        shell_src, std::to_string(shell7[i]),
        [n] { return std::to_string(generalized_kissing_count(catalog(n), 12)); });
  }
  add("shell12.x.d6", "vectors of sqrt2D6 with norm^2 in [4,12]", shell_src, "856",
      [] { return std::to_string(generalized_kissing_count(catalog("sqrt2D6"), 12)); });
  add("shell12.x.d7", "vectors of sqrt2D7 with norm^2 in [4,12]", shell_src, "1946",
      [] { return std::to_string(generalized_kissing_count(catalog("sqrt2D7"), 12)); });
  add("shell08.e8", "vectors of sqrt2E8 with norm^2 in [4,8]",
      "reference shell count at squared outer radius 8", "2400",
      [] { return std::to_string(generalized_kissing_count(catalog("sqrt2E8"), 8)); });

  // further minimal-vector counts
  add("watson.kiss.x.d6", "minimal-vector count of sqrt2D6", kiss_src, "60",
      [] { return std::to_string(kissing_count(catalog("sqrt2D6"))); });
  add("watson.kiss.x.d7", "minimal-vector count of sqrt2D7", kiss_src, "84",
      [] { return std::to_string(kissing_count(catalog("sqrt2D7"))); });
  add("watson.kiss.x.d5v", "minimal-vector count of sqrt2D5v(1/4)", kiss_src, "56",
      [] { return std::to_string(kissing_count(catalog("sqrt2D5v"))); });
  add("watson.kiss.x.d6v", "minimal-vector count of sqrt2D6v(1/4)", kiss_src, "92",
      [] { return std::to_string(kissing_count(catalog("sqrt2D6v"))); });

  // the 26-neighbour three-dimensional lattice
  add("r23.min", "minimal squared norm of R23", "stated minimal distance of the witness lattice",
      "4", [] {
        auto [min2, mv] = minimal_vectors(catalog("R23"));
        return to_string(min2);
      });
  add("r23.shell", "vectors of R23 with norm^2 in [4,32/3]",
      "reference shell count at squared outer radius 32/3", "26",
      [] { return std::to_string(generalized_kissing_count(catalog("R23"), Rational(32, 3))); });

  // class-size law: modulo-3 classes of the [4,12] shell carry 1 or 3 points
  for (int i = 0; i < 7; ++i) {
    std::string n = sphere7[i];
    long long expect = shell7[i];
    add("classlaw." + n, "modulo-3 class sizes of the [4,12] shell of " + n,
        "class sizes are 1 or 3; 3*m3 + m1 recovers the shell count", "pass", [n, expect] {
          ShellResult shell = shell_vectors(catalog(n), {Rational(4), Rational(12)});
          ClassPartition p = mod_classes(shell, 3);
          if (!p.zero_class.empty()) return std::string("fail(zero residue class not empty)");
          long long m1 = 0, m3 = 0;
          for (const auto& [size, cnt] : p.histogram) {
            if (size == 1)
              m1 = static_cast<long long>(cnt);
            else if (size == 3)
              m3 = static_cast<long long>(cnt);
            else
              return std::string("fail(class of size " + std::to_string(size) + ")");
          }
          return pass_or(3 * m3 + m1 == expect, "3*m3+m1 = " + std::to_string(3 * m3 + m1));
        });
  }

  // triple/pair counting identities with derived pinned values
  struct IdentityPin {
    const char* lattice;
    long long sv2, triples;
  };
  for (IdentityPin pin : {IdentityPin{"sqrt2A2", 6, 2}, IdentityPin{"sqrt2A3", 24, 8},
                          IdentityPin{"sqrt2D4", 96, 32}, IdentityPin{"sqrt2E8", 6720, 2240}}) {
    std::string n = pin.lattice;
    std::string expect = "sv2=" + std::to_string(pin.sv2) +
                         " triples=" + std::to_string(pin.triples) + " identities=ok";
    add("identity." + n, "triple/pair identities on " + n,
        "derived: independent pair scan and modulo-3 census, pinned", expect, [n] {
          TriplePairReport rep = triple_pair_identity(catalog(n));
          if (!rep.pass)
            return std::string("fail(ratio=") + (rep.ratio_ok ? "ok" : "bad") +
                   " halfsum=" + (rep.half_sum_ok ? "ok" : "bad") +
                   " incidence=" + (rep.incidence_ok ? "ok" : "bad") + ")";
          return "sv2=" + std::to_string(rep.sv2_count) +
                 " triples=" + std::to_string(rep.triple_count) + " identities=ok";
        });
  }

  // collinear quadruples: none below squared radius 12, the (12,4,4,12)
  // pattern at 12 (pattern violations throw inside collinear_quadruples)
  const char* sphere_all[] = {"sqrt2A2", "sqrt2A3", "sqrt2D4",  "sqrt2D5",  "sqrt2E6", "sqrt2E7",
                              "sqrt2E8", "sqrt2D6", "sqrt2D7", "sqrt2D5v", "sqrt2D6v", "R23"};
  for (const char* name : sphere_all) {
    std::string n = name;
    add("quadruple.none8." + n, "no modulo-3 pairs in the [4,8] shell of " + n,
        "below squared radius 12 the shell admits no equivalent pair", "0", [n] {
          Lattice l = catalog(n);
          ShellResult shell = shell_vectors(l, {Rational(4), Rational(8)});
          return std::to_string(collinear_quadruples(l, shell, mod_classes(shell, 3)).size());
        });
    add("quadruple.sig12." + n, "quadruple norm pattern (12,4,4,12) at radius^2 12 for " + n,
        "each modulo-3 pair induces a collinear quadruple with gaps of squared length 4", "pass",
        [n] {
          Lattice l = catalog(n);
          ShellResult shell = shell_vectors(l, {Rational(4), Rational(12)});
          auto quads = collinear_quadruples(l, shell, mod_classes(shell, 3));
          return std::string("pass");  // violations throw
        });
  }

  // shell-cardinality bounds
  for (const char* name : sphere_all) {
    std::string n = name;
    add("bound.shell08." + n, "shell [4,8] of " + n + " within 3^n - 1",
        "class-count bound below squared radius 12", "pass", [n] {
          Lattice l = catalog(n);
          long long card =
              static_cast<long long>(shell_vectors(l, {Rational(4), Rational(8)}).count());
          Rational limit = shell_bound_from_kissing(static_cast<int>(l.rank()), 0);
          return pass_or(Rational(card) <= limit, std::to_string(card));
        });
    add("bound.shell12." + n, "shell [4,12] of " + n + " within 3^n - 1 + kissing^2/9",
        "class-count bound at squared radius 12", "pass", [n] {
          Lattice l = catalog(n);
          long long card =
              static_cast<long long>(shell_vectors(l, {Rational(4), Rational(12)}).count());
          long long kappa = kissing_count(l);
          Rational limit = shell_bound_from_kissing(static_cast<int>(l.rank()), kappa);
          return pass_or(Rational(card) <= limit, std::to_string(card));
        });
  }
  add("bound.value.n8", "bound value 3^8 - 1 + 240^2/9", "closed form", "12960",
      [] { return to_string(shell_bound_from_kissing(8, 240)); });
  add("bound.value.n5", "bound value 3^5 - 1 + 40^2/9", "closed form", "3778/9",
      [] { return to_string(shell_bound_from_kissing(5, 40)); });

  // three-dimensional cross-polytope
  add("xpoly3.case1", "l1-gauge boundary count of C3_case1", "reference count", "18",
      [] { return std::to_string(gauge_kissing_count(catalog("C3_case1"), Gauge::cross_polytope(3))); });
  add("xpoly3.densest", "l1-gauge boundary count of C3_densest", "reference count", "14",
      [] { return std::to_string(gauge_kissing_count(catalog("C3_densest"), Gauge::cross_polytope(3))); });
  add("xpoly3.packing", "C3 catalog lattices pack the cross-polytope", "packing requirement",
      "pass", [] {
        for (const char* n : {"C3_case1", "C3_densest"})
          if (!is_packing_lattice(catalog(n), Gauge::cross_polytope(3)).ok)
            return std::string("fail(") + n + ")";
        return std::string("pass");
      });

  // four-dimensional cross-polytope
  struct XPoly4 {
    const char* lattice;
    long long count;
    const char* dens;
  };
  for (XPoly4 c : {XPoly4{"C4_main", 40, "2/3"}, XPoly4{"C4_threepair", 36, "2/3"},
                   XPoly4{"C4_dense", 26, "32/45"}}) {
    std::string n = c.lattice;
    add("xpoly4.count." + n, "l1-gauge boundary count of " + n, "reference count",
        std::to_string(c.count),
        [n] { return std::to_string(gauge_kissing_count(catalog(n), Gauge::cross_polytope(4))); });
    add("xpoly4.density." + n, "packing density of " + n + " for body volume 2/3",
        "reference density", c.dens, [n] {
          DensityResult d = density(catalog(n), Rational(2, 3));
          return d.exact ? to_string(d.value) : "inexact";
        });
  }
  add("xpoly4.det.dense", "Gram determinant of C4_dense",
      "derived: fraction-free elimination, pinned (15/16 squared)", "225/256",
      [] { return to_string(det(catalog("C4_dense").gram())); });

  // cuboctahedron gauge and the tetrahedron candidates
  add("cuboct.count.cubic", "cuboctahedron-gauge boundary count of T_cubic", "reference count",
      "18", [] {
        return std::to_string(gauge_kissing_count(catalog("T_cubic"), Gauge::cuboctahedron()));
      });
  add("cuboct.count.hex", "cuboctahedron-gauge boundary count of T_hex",
      "derived: exact gauge filter over the Euclidean [4,8] shell, pinned", "8",
      [] { return std::to_string(gauge_boundary_count(catalog("T_hex"), Gauge::cuboctahedron())); });
  add("cuboct.count.mid", "cuboctahedron-gauge boundary count of T_mid",
      "derived: exact gauge filter over the Euclidean [4,8] shell, pinned", "8",
      [] { return std::to_string(gauge_boundary_count(catalog("T_mid"), Gauge::cuboctahedron())); });
  add("cuboct.maximizer", "T_cubic alone reaches 18 among the three candidates",
      "comparison of the three boundary counts", "pass", [] {
        auto counts = cuboctahedron_counts_for_tetrahedron();
        return pass_or(counts["T_cubic"] == 18 && counts["T_hex"] < 18 && counts["T_mid"] < 18,
                       "hex=" + std::to_string(counts["T_hex"]) +
                           " mid=" + std::to_string(counts["T_mid"]));
      });
  struct TShell {
    const char* lattice;
    long long count;
  };
  for (TShell c : {TShell{"T_hex", 20}, TShell{"T_mid", 18}, TShell{"T_cubic", 18}}) {
    std::string n = c.lattice;
    add("cuboct.euclid." + n, "Euclidean [4,8] shell count of " + n,
        "reference count for the candidate classification", std::to_string(c.count), [n] {
          return std::to_string(shell_vectors(catalog(n), {Rational(4), Rational(8)}).count());
        });
  }

  // coordinatewise orthogonality of modulo-2 pairs in gauge shells
  for (const char* name : {"C3_densest", "C3_case1", "C4_main", "C4_threepair", "C4_dense"}) {
    std::string n = name;
    add("orth." + n, "coordinatewise products of modulo-2 pairs vanish on " + n,
        "structure of equivalent pairs on the cross-polytope boundary", "pass", [n] {
          Lattice l = catalog(n);
          auto rep = mod2_orthogonality(l, Gauge::cross_polytope(static_cast<int>(l.rank())));
          return pass_or(rep.pass, "witness pair exists");
        });
  }
  add("orth.midpoint.C4_main", "shared midpoints in the C4_main gauge shell are half-vectors",
      "midpoint structure of doubly-covered classes", "pass", [] {
        auto [ok, shared] = shared_midpoints_are_half(catalog("C4_main"), Gauge::cross_polytope(4));
        if (!ok) return std::string("fail(midpoint with coordinate != 1/2)");
        return pass_or(shared > 0, "vacuous");
      });

  // density against the kissing-number bound
  struct DensCase {
    const char* lattice;
    const char* volume;
    int gauge_dim;  // 0 = cuboctahedron
  };
  for (DensCase c : {DensCase{"C3_densest", "4/3", 3}, DensCase{"C3_case1", "4/3", 3},
                     DensCase{"C4_main", "2/3", 4}, DensCase{"C4_threepair", "2/3", 4},
                     DensCase{"C4_dense", "2/3", 4}, DensCase{"T_cubic", "20/3", 0}}) {
    std::string n = c.lattice;
    std::string vol = c.volume;
    int dim = c.gauge_dim;
    add("densbound." + n, "density of " + n + " within (kissing+1)/2^n",
        "density bound from the kissing number", "pass", [n, vol, dim] {
          Lattice l = catalog(n);
          Gauge g = dim == 0 ? Gauge::cuboctahedron() : Gauge::cross_polytope(dim);
          long long kappa = gauge_kissing_count(l, g);
          DensityResult d = density(l, parse_rational(vol));
          if (!d.exact) return std::string("fail(inexact density)");
          Rational limit = blichfeldt_density_bound(kappa, static_cast<int>(l.rank()));
          return pass_or(d.value <= limit, to_string(d.value) + " > " + to_string(limit));
        });
  }

  if (with_oracle) {
    for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z5", "A2", "A3", "A4", "A5", "D3", "D4",
                             "D5", "sqrt2A2", "sqrt2A3", "sqrt2D4", "sqrt2D5", "C3_densest",
                             "C3_case1", "C4_main", "C4_threepair", "C4_dense", "T_hex", "T_mid",
                             "T_cubic", "R23"}) {
      std::string n = name;
      add("oracle.box." + n, "kernel vs box oracle on the [4,12] shell of " + n,
          "derived: independent box enumeration", "pass", [n] {
            Lattice l = catalog(n);
            ShellResult mine = shell_vectors(l, {Rational(4), Rational(12)});
            auto box = oracle::box_shell(to_oracle_gram(l), 4, 12);
            if (box.size() != mine.count()) return std::string("fail(count)");
            for (size_t i = 0; i < box.size(); ++i)
              if (box[i].first != mine.vectors[i] || box[i].second != mine.norms2[i])
                return std::string("fail(entry " + std::to_string(i) + ")");
            return std::string("pass");
          });
    }
  }

  return cases;
}

}  // namespace detail

inline std::vector<VerifyCase> run_verify(const VerifyOptions& opt = {}) {
  std::vector<detail::CaseSpec> specs = detail::verify_cases(opt.with_oracle);
  if (!opt.filter.empty()) {
    std::erase_if(specs, [&](const detail::CaseSpec& c) {
      return c.id.compare(0, opt.filter.size(), opt.filter) != 0;
    });
  }
  std::sort(specs.begin(), specs.end(),
            [](const detail::CaseSpec& a, const detail::CaseSpec& b) { return a.id < b.id; });

  std::vector<VerifyCase> out(specs.size());
  auto run_one = [&](size_t i) {
    const auto& s = specs[i];
    VerifyCase c{s.id, s.description, s.source, s.expected, "", false};
    try {
      c.computed = s.compute();
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    c.pass = c.computed == c.expected;
    out[i] = std::move(c);
  };

  int workers = opt.workers;
  if (workers <= 1 || specs.size() <= 1) {
    for (size_t i = 0; i < specs.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> tasks;
    size_t stride = static_cast<size_t>(workers);
    for (size_t w = 0; w < stride; ++w)
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (size_t i = w; i < specs.size(); i += stride) run_one(i);
      }));
    for (auto& t : tasks) t.get();
  }
  return out;
}

inline bool all_pass(const std::vector<VerifyCase>& cases) {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

inline nlohmann::ordered_json verify_json(const std::vector<VerifyCase>& cases) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["source"] = c.source;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["status"] = c.pass ? "pass" : "fail";
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string verify_csv(const std::vector<VerifyCase>& cases) {
  std::ostringstream out;
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  out << "id,status,expected,computed,description,source\n";
  for (const auto& c : cases)
    out << c.id << ',' << (c.pass ? "pass" : "fail") << ',' << quote(c.expected) << ','
        << quote(c.computed) << ',' << quote(c.description) << ',' << quote(c.source) << "\n";
  return out.str();
}

inline std::string verify_table(const std::vector<VerifyCase>& cases) {
  size_t idw = 4, exw = 8;
  for (const auto& c : cases) {
    idw = std::max(idw, c.id.size());
    exw = std::max(exw, c.expected.size());
  }
  // decimal rendering is display-only; comparisons are always exact
  auto decimal_hint = [](const std::string& exact) -> std::string {
    if (exact.find('/') == std::string::npos) return "";
    try {
      std::ostringstream d;
      d << " (~" << std::fixed << std::setprecision(6) << to_double(parse_rational(exact)) << ")";
      return d.str();
    } catch (const error&) {
      return "";
    }
  };
  std::ostringstream out;
  size_t failed = 0;
  for (const auto& c : cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << std::string(idw - c.id.size() + 2, ' ')
        << "expected " << c.expected << std::string(exw - c.expected.size() + 2, ' ') << "got "
        << c.computed << decimal_hint(c.computed);
    if (!c.pass) ++failed;
    out << "\n";
  }
  out << cases.size() - failed << "/" << cases.size() << " cases pass\n";
  return out.str();
}

}  // namespace latshell
