// Acceptance gate: one PASS/FAIL line per criterion, exact checks only.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tstruct/cli.hpp"
#include "tstruct/curve_homology.hpp"
#include "tstruct/enumeration.hpp"
#include "tstruct/io.hpp"
#include "tstruct/perversity.hpp"
#include "tstruct/pullback.hpp"

using namespace tstruct;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (pass || notes.size() < 8) notes.push_back("failed: " + what);
    pass = false;
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string show(std::span<const int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Random poset with a natural labeling and heights in [0, 4].
struct Sample {
  Relation rel;
  std::vector<int> heights;
};

Sample random_sample(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  std::bernoulli_distribution slack(0.25);
  for (;;) {
    const auto r = random_relation(size(rng), density(rng), rng);
    // Index order is a linear extension, so one pass settles every point.
    std::vector<int> h(r.n, 0);
    bool fits = true;
    for (std::size_t j = 0; j < r.n && fits; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (r.leq(i, j)) h[j] = std::max(h[j], h[i] + 1);
      }
      if (slack(rng)) ++h[j];
      fits = h[j] <= 4;
    }
    if (fits) return {r, h};
  }
}

// Monotone p with values in [-3, 3]. Half the draws also stay under the
// comonotone ceiling when they can, so both sides of the equivalence occur.
std::vector<int> random_monotone(const Sample& s, std::mt19937& rng) {
  std::bernoulli_distribution aim_comonotone(0.5);
  const bool aim = aim_comonotone(rng);
  std::vector<int> p(s.rel.n);
  for (std::size_t j = 0; j < s.rel.n; ++j) {
    int floor = -3;
    int ceiling = 3;
    for (std::size_t i = 0; i < j; ++i) {
      if (!s.rel.leq(i, j)) continue;
      floor = std::max(floor, p[i]);
      ceiling = std::min(ceiling, p[i] + s.heights[j] - s.heights[i]);
    }
    const int top = aim && ceiling >= floor ? ceiling : 3;
    p[j] = std::uniform_int_distribution<int>(floor, top)(rng);
  }
  return p;
}

Outcome criteria_one_and_two(Outcome& two) {
  Outcome one;
  std::mt19937 rng(20240611);
  const int samples = 2000;
  std::size_t comonotone = 0;
  for (int k = 0; k < samples; ++k) {
    const auto s = random_sample(rng);
    const auto values = random_monotone(s, rng);
    const auto poset = to_poset(s.rel, s.heights);
    const Perversity p(poset, values);
    const auto tag = "sample " + std::to_string(k) + " p=" + show(values);

    const auto pf = to_filtration(p);
    one.expect(pf.status.ok, tag + " status");
    one.expect(validate_thomason(pf.filtration).ok, tag + " Thomason");
    one.expect(from_filtration(pf.filtration) == p, tag + " round trip");

    const bool co = is_comonotone(p).ok;
    comonotone += co ? 1 : 0;
    two.expect(co == is_thomason_cousin(pf.filtration).ok, tag + " comonotone vs TC");
    two.expect(co == naive_comonotone(s.rel, s.heights, values), tag + " comonotone vs oracle");
  }
  one.note(std::to_string(samples) + " monotone perversities");
  two.note(std::to_string(comonotone) + " comonotone, " + std::to_string(samples - comonotone) + " not");
  return one;
}

std::vector<std::uint64_t> eval_key(const Filtration& f, Window w) {
  std::vector<std::uint64_t> k;
  for (int i = w.lo - 1; i <= w.hi; ++i) k.push_back(f.eval(i).bits());
  return k;
}

Outcome criterion_three() {
  Outcome out;
  std::size_t posets = 0;
  std::size_t windows = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& r : unlabeled_posets(n)) {
      for (const auto& h : {rank_heights(r), gapped_heights(r, 2)}) {
        ++posets;
        const Enumerator en(to_poset(r, h));
        for (int len = 0; len <= 4; ++len) {
          const Window w{0, len};
          ++windows;
          const auto tc = en.count_tc_filtrations(w);
          const auto mc = en.mc_perversities(matching_range(w)).size();
          out.expect(tc == mc, "count n=" + std::to_string(n) + " len=" + std::to_string(len));
        }
      }
    }
  }
  out.note(std::to_string(windows) + " windows over " + std::to_string(posets) + " height-labeled posets up to 6 points");

  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& r : unlabeled_posets(n)) {
      for (const auto& h : {rank_heights(r), gapped_heights(r, 2)}) {
        const Enumerator en(to_poset(r, h));
        for (int len = 0; len <= 4; ++len) {
          const Window w{0, len};
          std::set<std::vector<std::uint64_t>> got;
          for (const auto& f : en.tc_filtrations(w)) got.insert(eval_key(f, w));
          out.expect(got == naive_tc_filtrations(r, h, w.lo, w.hi), "TC brute force n=" + std::to_string(n));
          const auto range = matching_range(w);
          std::set<std::vector<int>> got_p;
          for (const auto& q : en.mc_perversities(range)) got_p.insert({q.values().begin(), q.values().end()});
          out.expect(got_p == naive_mc_perversities(r, h, range.lo, range.hi), "mc brute force n=" + std::to_string(n));
          ++compared;
        }
      }
    }
  }
  out.note(std::to_string(compared) + " brute-force comparisons up to 5 points");

  const auto dvr = SpectralPoset::create({{"eta", 0}, {"m", 1}}, {{"eta", "m"}});
  const auto r1 = enumerate_mc_perversities(dvr, {0, 1}).size();
  const auto r2 = enumerate_mc_perversities(dvr, {0, 2}).size();
  out.expect(r1 == 3, "DVR range [0,1]");
  out.expect(r2 == 5, "DVR range [0,2]");
  out.expect(enumerate_tc_filtrations(dvr, {1, 2}).size() == 3, "DVR TC window [1,2)");
  out.expect(enumerate_tc_filtrations(dvr, {1, 3}).size() == 5, "DVR TC window [1,3)");
  out.note("DVR: " + std::to_string(r1) + " on [0,1], " + std::to_string(r2) + " on [0,2]");
  return out;
}

Outcome criterion_four() {
  Outcome out;
  struct Target {
    Relation rel;
    PosetRef poset;
    std::vector<Perversity> mc;
  };
  // p and p + c pull back alike, so one representative per shift class is
  // enough: min p = 0 and values in [0, 3] covers every p on [-1, 2].
  std::vector<Target> targets;
  std::vector<std::pair<Relation, PosetRef>> sources;
  std::size_t representatives = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& r : unlabeled_posets(n)) {
      for (const auto& h : {rank_heights(r), gapped_heights(r, 2)}) {
        const auto p = to_poset(r, h);
        sources.emplace_back(r, p);
        auto mc = enumerate_mc_perversities(p, {0, 3});
        std::erase_if(mc, [](const Perversity& q) { return q.min_value() != 0; });
        representatives += mc.size();
        targets.push_back({r, p, std::move(mc)});
      }
    }
  }

  std::size_t maps = 0;
  std::size_t admissible = 0;
  std::size_t checks = 0;
  std::size_t violating = 0;
  std::optional<std::string> recorded;
  for (const auto& [src_rel, src] : sources) {
    for (const auto& t : targets) {
      for (const auto& m : continuous_maps(src_rel, t.rel)) {
        ++maps;
        const auto f = PosetMorphism::create(src, t.poset, std::vector<PointIndex>(m.begin(), m.end()));
        if (satisfies_codim_inequality(f).ok) {
          ++admissible;
          for (const auto& p : t.mc) {
            ++checks;
            const auto q = pullback_perversity(f, p);
            out.expect(is_monotone(q).ok && is_comonotone(q).ok, "pullback along an admissible map");
          }
        } else {
          ++violating;
          if (!recorded) {
            if (auto bad = find_comonotone_counterexample(f, -1, 2)) {
              recorded = std::to_string(src->size()) + "-point source, " + std::to_string(t.poset->size()) +
                         "-point target, p=" + show(bad->values());
            }
          }
        }
      }
    }
  }
  out.note(std::to_string(representatives) + " monotone comonotone perversities up to shift on " +
           std::to_string(targets.size()) + " targets");
  out.note(std::to_string(maps) + " continuous maps, " + std::to_string(admissible) + " satisfy the codim inequality, " +
           std::to_string(checks) + " pullbacks checked");

  // Steep chain: x ⋖ y of codim 1 onto u ⋖ v of codim 2.
  const auto steep_src = SpectralPoset::create({{"x", 0}, {"y", 1}}, {{"x", "y"}});
  const auto steep_tgt = SpectralPoset::create({{"u", 0}, {"v", 2}}, {{"u", "v"}});
  const auto f = PosetMorphism::create(steep_src, steep_tgt, {{"x", "u"}, {"y", "v"}});
  out.expect(!satisfies_codim_inequality(f).ok, "steep chain violates the codim inequality");
  const Perversity p(steep_tgt, {0, 2});
  out.expect(is_monotone(p).ok && is_comonotone(p).ok, "steep chain p is monotone comonotone");
  out.expect(!is_comonotone(pullback_perversity(f, p)).ok, "steep chain pullback loses comonotonicity");
  out.expect(find_comonotone_counterexample(f, 0, 2).has_value(), "steep chain counterexample search");
  out.note("counterexample: x⋖y onto u⋖v (codim 1 vs 2), p(u)=0, p(v)=2, pullback (0,2) not comonotone");
  out.expect(recorded.has_value(), "a counterexample among the " + std::to_string(violating) + " violating maps");
  if (recorded) out.note("first corpus counterexample: " + *recorded);
  return out;
}

Outcome criterion_five() {
  Outcome out;
  std::size_t connected = 0;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_rank_sorted_poset(n, [&](const Relation& r) {
      ++total;
      const auto c = component_count(r);
      connected += c == 1 ? 1 : 0;
      const auto got = constant_tc_filtrations(to_poset(r, rank_heights(r))).size();
      out.expect(got == (std::size_t{1} << c), "constant TC count n=" + std::to_string(n));
    });
  }
  out.note(std::to_string(total) + " labeled posets up to 8 points covering every isomorphism class, " +
           std::to_string(connected) + " connected");
  return out;
}

Outcome criterion_six() {
  Outcome out;
  std::size_t posets = 0;
  std::size_t filtrations = 0;
  std::size_t cousin = 0;
  const int len = 4;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& r : unlabeled_posets(n)) {
      const auto h = graded_heights(r);
      if (!h) continue;
      ++posets;
      const auto poset = to_poset(r, *h);
      const auto downs = enumerate_down_sets(poset);
      const auto check = [&](const Filtration& f) {
        ++filtrations;
        const bool tc = is_thomason_cousin(f).ok;
        cousin += tc ? 1 : 0;
        out.expect(is_cousin_via_covers(f) == tc, "graded cover Cousin n=" + std::to_string(n));
      };
      for (auto s : downs) check(s.empty() ? Filtration::empty(poset) : Filtration::constant(poset, s));
      // Every decreasing chain tail ⊇ φ(0) ⊇ ... ⊇ φ(len − 1); shorter
      // windows appear through repeated or empty levels.
      std::vector<PointSet> levels;
      std::function<void(PointSet, PointSet)> rec = [&](PointSet tail, PointSet above) {
        if (static_cast<int>(levels.size()) == len) {
          check(Filtration::finite(poset, 0, tail, levels));
          return;
        }
        for (auto s : downs) {
          if (!s.subset_of(above)) continue;
          levels.push_back(s);
          rec(tail, s);
          levels.pop_back();
        }
      };
      for (auto tail : downs) rec(tail, tail);
    }
  }
  out.note(std::to_string(filtrations) + " Thomason filtrations on " + std::to_string(posets) +
           " graded posets up to 6 points, " + std::to_string(cousin) + " Thomason-Cousin");
  return out;
}

Outcome criterion_seven() {
  using namespace tstruct::curve;
  Outcome out;
  std::size_t formulas = 0;
  for (int g = 1; g <= 3; ++g) {
    const CurveContext ctx(g);
    for (int r = 1; r <= 5; ++r) {
      for (int d = 1; d <= 5; ++d) {
        const auto t = SheafClass::torsion(d);
        for (const auto& w : {SheafClass::bundle(r, 0, true), SheafClass::bundle(r, d), SheafClass::bundle(r, -d)}) {
          out.expect(hom_dim_table(ctx, t, w, 0) == 0, "hom(T,W)");
          out.expect(hom_dim_table(ctx, t, w, 1) == r * d, "hom(T,W[1])");
          out.expect(hom_dim_table(ctx, w, w, 0) == r * r, "hom(W,W)");
          out.expect(hom_dim_table(ctx, w, w, 1) == r * r * g, "hom(W,W[1])");
          out.expect(hom_dim_table(ctx, w, t, 0) == r * d, "hom(W,T)");
          out.expect(hom_dim_table(ctx, w, t, 1) == 0, "hom(W,T[1])");
          formulas += 6;
        }
      }
    }
  }
  const auto six = hom_dim_table(CurveContext(2), SheafClass::torsion(3), SheafClass::bundle(2, 0, true), 1);
  out.expect(six == 6, "hom(T_3, W_2[1])");
  out.note(std::to_string(formulas) + " formula evaluations, hom(T_3, W_2[1]) = " + std::to_string(six));

  const CurveContext ell(1);
  std::vector<SheafClass> grid;
  for (int d = 1; d <= 5; ++d) grid.push_back(SheafClass::torsion(d));
  for (int r = 1; r <= 5; ++r) {
    grid.push_back(SheafClass::bundle(r, 0, true));
    for (int deg = -5; deg <= 5; ++deg) grid.push_back(SheafClass::bundle(r, deg));
  }
  std::size_t pairs = 0;
  std::size_t distinct = 0;
  for (const auto& v : grid) {
    for (const auto& w : grid) {
      ++pairs;
      const auto form = euler_form(ell, {v, 0}, {w, 0});
      const auto rk = euler_characteristic(ell, w) * v.rank() - euler_characteristic(ell, v) * w.rank();
      out.expect(form == rk, "Euler form " + v.to_string() + ", " + w.to_string());
      out.expect(euler_rank_formula(ell, v, w) == rk, "rank formula " + v.to_string() + ", " + w.to_string());
      if (!(slope(ell, v) == slope(ell, w))) {
        ++distinct;
        out.expect(form != 0, "distinct slopes " + v.to_string() + ", " + w.to_string());
      }
    }
  }
  out.note(std::to_string(pairs) + " genus-1 pairs, " + std::to_string(distinct) + " with distinct slopes");
  return out;
}

Outcome criterion_eight() {
  using namespace tstruct::curve;
  Outcome out;
  const CurveContext ell(1);
  std::vector<ObjectClass> classes;
  for (int i = -1; i <= 1; ++i) {
    classes.push_back({SheafClass::structure_sheaf(), i});
    classes.push_back({SheafClass::skyscraper(), i});
  }
  const auto found = search_admissible_bipartitions(ell, classes, -1, 1);
  out.expect(found.empty(), "no admissible bipartition at genus 1");
  const auto loose = search_admissible_bipartitions(ell, classes, -1, 1, {.bundle_at_every_shift = false});
  out.note(std::to_string(found.size()) + " admissible bipartitions; " + std::to_string(loose.size()) +
           " survive without the bundle-at-every-shift rule");
  for (int g = 1; g <= 3; ++g) {
    const auto rep = check_nonexistence_obstructions(CurveContext(g), {3, 3, 1});
    out.expect(rep.failures() == 0, "obstructions at genus " + std::to_string(g));
    out.note("genus " + std::to_string(g) + ": " + std::to_string(rep.checks.size()) + " obstruction checks, " +
             std::to_string(rep.failures()) + " failures");
  }
  return out;
}

Outcome criterion_nine() {
  Outcome out;
  const auto dir = fs::temp_directory_path() / ("tstruct-acceptance-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path p;
    ~Cleanup() { fs::remove_all(p); }
  } cleanup{dir};

  std::vector<std::string> files;
  const auto save = [&](const std::string& name, const PosetRef& p) {
    const auto path = (dir / name).string();
    std::ofstream(path) << io::dump(io::to_json(*p));
    files.push_back(path);
  };
  save("dvr.json", SpectralPoset::create({{"eta", 0}, {"m", 1}}, {{"eta", "m"}}));
  save("fan.json", SpectralPoset::create({{"xi", 0}, {"a", 1}, {"b", 1}}, {{"xi", "a"}, {"xi", "b"}}));
  save("gap.json", SpectralPoset::create({{"xi", 0}, {"z", 2}}, {{"xi", "z"}}));
  const auto& five = unlabeled_posets(5);
  const auto& six = unlabeled_posets(6);
  for (std::size_t k : {std::size_t{0}, five.size() / 2, five.size() - 1}) {
    save("five" + std::to_string(k) + ".json", to_poset(five[k], gapped_heights(five[k], 1)));
  }
  for (std::size_t k : {std::size_t{1}, six.size() / 3, six.size() - 2}) {
    save("six" + std::to_string(k) + ".json", to_poset(six[k], rank_heights(six[k])));
  }

  const auto invoke = [](std::vector<std::string> args) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli::run(args, o, e);
    return std::to_string(code) + "\n" + o.str();
  };
  std::size_t runs = 0;
  std::size_t bytes = 0;
  for (const auto& file : files) {
    for (const std::string what : {"filtrations", "perversities", "down-sets", "crosscheck", "constant"}) {
      for (const std::string format : {"records", "csv"}) {
        std::vector<std::string> base{"enumerate", file, "--what", what, "--window=-1..2", "--format", format};
        std::string first;
        for (const std::string j : {"1", "8", "1", "8"}) {
          auto args = base;
          args.insert(args.end(), {"-j", j});
          const auto got = invoke(args);
          ++runs;
          if (first.empty()) {
            first = got;
            bytes += got.size();
            out.expect(got.rfind("0\n", 0) == 0, what + " on " + file + " exits 0");
          } else {
            out.expect(got == first, what + " on " + file + " with -j " + j);
          }
        }
      }
    }
  }
  out.note(std::to_string(runs) + " enumerate runs over " + std::to_string(files.size()) + " posets, " +
           std::to_string(bytes) + " bytes per pass");
  return out;
}

}  // namespace

int main() {
  bool all = true;
  const auto report = [&](int id, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    all = all && out.pass;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", took.count());
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << secs << ")\n";
    for (const auto& n : out.notes) std::cout << "  " << n << "\n";
    std::cout.flush();
  };

  Outcome two;
  report(1, [&] { return criteria_one_and_two(two); });
  report(2, [&] { return two; });
  report(3, criterion_three);
  report(4, criterion_four);
  report(5, criterion_five);
  report(6, criterion_six);
  report(7, criterion_seven);
  report(8, criterion_eight);
  report(9, criterion_nine);
  return all ? 0 : 1;
}
