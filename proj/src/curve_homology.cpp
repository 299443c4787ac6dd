#include "tstruct/curve_homology.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>

#include "tstruct/error.hpp"

namespace tstruct::curve {

CurveContext::CurveContext(int genus) : genus_(genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
}

SheafClass SheafClass::torsion(int degree) {
  if (degree < 1) throw std::invalid_argument("torsion degree must be positive");
  return SheafClass(Torsion{degree});
}

SheafClass SheafClass::bundle(int rank, int line_degree, bool trivial_at_zero) {
  if (rank < 1) throw std::invalid_argument("bundle rank must be positive");
  if (trivial_at_zero && line_degree != 0) {
    throw std::invalid_argument("only a degree-0 line bundle can be trivial");
  }
  return SheafClass(HomogBundle{rank, line_degree, trivial_at_zero});
}

int SheafClass::rank() const { return is_torsion() ? 0 : as_bundle().rank; }

int SheafClass::degree() const {
  if (is_torsion()) return as_torsion().degree;
  return as_bundle().rank * as_bundle().line_degree;
}

bool SheafClass::same_line_bundle(const SheafClass& other) const {
  if (is_torsion() || other.is_torsion()) return false;
  const auto& a = as_bundle();
  const auto& b = other.as_bundle();
  return a.line_degree == b.line_degree && (a.line_degree != 0 || a.trivial_at_zero == b.trivial_at_zero);
}

SheafClass SheafClass::dual() const {
  if (is_torsion()) throw std::invalid_argument("dual is only modeled for bundles");
  const auto& b = as_bundle();
  return bundle(b.rank, -b.line_degree, b.trivial_at_zero);
}

std::string SheafClass::to_string() const {
  if (is_torsion()) {
    const int d = as_torsion().degree;
    return d == 1 ? "k(x)" : "k(x)^" + std::to_string(d);
  }
  const auto& b = as_bundle();
  std::string line;
  if (b.line_degree == 0) {
    line = b.trivial_at_zero ? "O" : "N0";
  } else {
    line = "L(" + std::to_string(b.line_degree) + ")";
  }
  return b.rank == 1 ? line : line + "^" + std::to_string(b.rank);
}

std::string ObjectClass::to_string() const {
  return sheaf.to_string() + "[" + std::to_string(shift) + "]";
}

namespace {

/// h⁰ of a line bundle on an elliptic curve.
std::int64_t h0_elliptic(int degree, bool trivial) {
  if (degree > 0) return degree;
  if (degree == 0 && trivial) return 1;
  return 0;
}

}  // namespace

std::int64_t hom_dim_table(const CurveContext& ctx, const SheafClass& e, const SheafClass& f, int ext_degree) {
  if (ext_degree != 0 && ext_degree != 1) throw std::invalid_argument("Ext degree must be 0 or 1");
  const std::int64_t g = ctx.genus();

  if (e.is_torsion() && f.is_torsion()) {
    // k(x)^d against k(x)^e: Hom = Ext¹ = d·e.
    return std::int64_t{e.as_torsion().degree} * f.as_torsion().degree;
  }
  if (e.is_torsion()) {
    const std::int64_t rd = std::int64_t{f.rank()} * e.as_torsion().degree;
    return ext_degree == 0 ? 0 : rd;
  }
  if (f.is_torsion()) {
    const std::int64_t rd = std::int64_t{e.rank()} * f.as_torsion().degree;
    return ext_degree == 0 ? rd : 0;
  }

  const std::int64_t rs = std::int64_t{e.rank()} * f.rank();
  if (e.same_line_bundle(f)) return ext_degree == 0 ? rs : rs * g;
  if (g != 1) {
    throw OutOfTableError("Hom(" + e.to_string() + ", " + f.to_string() + ") with distinct line bundles needs genus 1");
  }
  // Hom(L^r, L'^s) = (L' ⊗ L⁻¹)^{rs}; Ext¹ by Serre duality with ω = O.
  const int deg = f.as_bundle().line_degree - e.as_bundle().line_degree;
  return ext_degree == 0 ? rs * h0_elliptic(deg, false) : rs * h0_elliptic(-deg, false);
}

std::int64_t hom_dim(const CurveContext& ctx, const ObjectClass& e, const ObjectClass& f) {
  const int m = f.shift - e.shift;
  if (m != 0 && m != 1) return 0;
  return hom_dim_table(ctx, e.sheaf, f.sheaf, m);
}

std::int64_t euler_form(const CurveContext& ctx, const ObjectClass& e, const ObjectClass& f) {
  const int m = f.shift - e.shift;
  const auto chi = hom_dim_table(ctx, e.sheaf, f.sheaf, 0) - hom_dim_table(ctx, e.sheaf, f.sheaf, 1);
  return (m % 2 == 0) ? chi : -chi;
}

std::int64_t euler_characteristic(const CurveContext& ctx, const SheafClass& s) {
  return std::int64_t{s.degree()} + std::int64_t{s.rank()} * (1 - ctx.genus());
}

std::int64_t euler_rank_formula(const CurveContext& ctx, const SheafClass& v, const SheafClass& w) {
  if (ctx.genus() != 1) throw std::invalid_argument("the rank formula is for genus 1");
  return euler_characteristic(ctx, w) * v.rank() - euler_characteristic(ctx, v) * w.rank();
}

std::string Slope::to_string() const {
  if (infinite) return "inf";
  return denominator == 1 ? std::to_string(numerator) : std::to_string(numerator) + "/" + std::to_string(denominator);
}

Slope slope(const CurveContext& ctx, const SheafClass& s) {
  if (ctx.genus() != 1) throw std::invalid_argument("slopes are computed for genus 1");
  if (s.is_torsion()) return Slope{true, 0, 1};
  const auto chi = euler_characteristic(ctx, s);
  const std::int64_t rk = s.rank();
  const auto d = std::gcd(chi, rk);
  return Slope{false, chi / d, rk / d};
}

std::size_t ObstructionReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

ObstructionReport check_nonexistence_obstructions(const CurveContext& ctx, const ObstructionGrid& grid) {
  if (ctx.genus() < 1) throw std::invalid_argument("the nonexistence results need genus at least 1");
  const std::int64_t g = ctx.genus();
  ObstructionReport report{ctx.genus(), {}};
  auto add = [&](std::string name, std::string subject, std::int64_t value, std::int64_t expected, bool strict) {
    const bool ok = value == expected && (!strict || value != 0);
    report.checks.push_back({std::move(name), std::move(subject), value, expected, ok});
  };

  std::vector<SheafClass> bundles;
  for (int r = 1; r <= grid.max_rank; ++r) {
    for (int a = -grid.max_degree; a <= grid.max_degree; ++a) {
      bundles.push_back(SheafClass::bundle(r, a, a == 0));
      if (a == 0) bundles.push_back(SheafClass::bundle(r, 0, false));
    }
  }

  for (const auto& w : bundles) {
    const std::int64_t r = w.rank();
    for (int d = 1; d <= grid.max_degree; ++d) {
      const auto t = SheafClass::torsion(d);
      for (int i = -grid.max_shift; i <= grid.max_shift; ++i) {
        const auto subject = "T=" + ObjectClass{t, i}.to_string() + " W=" + ObjectClass{w, i}.to_string();
        add("hom(T,W[1])=r*d>0", subject, hom_dim(ctx, {t, i}, {w, i + 1}), r * d, true);
        add("hom(W,T)=r*d>0", subject, hom_dim(ctx, {w, i}, {t, i}), r * d, true);
        add("hom(T,W)=0", subject, hom_dim(ctx, {t, i}, {w, i}), 0, false);
        add("hom(W,T[1])=0", subject, hom_dim(ctx, {w, i}, {t, i + 1}), 0, false);
      }
      if (g == 1) {
        add("euler(W,T)=r*d!=0", "W=" + w.to_string() + " T=" + t.to_string(),
            euler_form(ctx, {w, 0}, {t, 0}), r * d, true);
      }
    }
    for (int i = -grid.max_shift; i <= grid.max_shift; ++i) {
      const auto subject = "W=" + ObjectClass{w, i}.to_string();
      add("hom(W,W)=r^2", subject, hom_dim(ctx, {w, i}, {w, i}), r * r, true);
      add("hom(W,W[1])=r^2*g>0", subject, hom_dim(ctx, {w, i}, {w, i + 1}), r * r * g, true);
    }
  }

  if (g == 1) {
    for (const auto& v : bundles) {
      for (const auto& w : bundles) {
        if (slope(ctx, v) == slope(ctx, w)) continue;
        const auto subject = "V=" + v.to_string() + " W=" + w.to_string();
        const auto formula = euler_rank_formula(ctx, v, w);
        add("euler(V,W)!=0 for distinct slopes", subject, euler_form(ctx, {v, 0}, {w, 0}), formula, true);
      }
    }
  }
  return report;
}

namespace {

class BipartitionSearch {
 public:
  BipartitionSearch(const CurveContext& ctx, std::span<const ObjectClass> classes, int lo, int hi,
                    const BipartitionRules& rules)
      : classes_(classes), lo_(lo), hi_(hi), rules_(rules), n_(classes.size()) {
    hom_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) hom_[a * n_ + b] = hom_dim(ctx, classes[a], classes[b]);
    }
    shifted_.assign(n_ * 2, kNone);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (classes[b].sheaf != classes[a].sheaf) continue;
        if (classes[b].shift == classes[a].shift - 1) shifted_[a * 2] = b;
        if (classes[b].shift == classes[a].shift + 1) shifted_[a * 2 + 1] = b;
      }
    }
  }

  void run_prefix(std::vector<Side> prefix, std::vector<Bipartition>& out) const {
    std::vector<Side> sides = std::move(prefix);
    recurse(sides, out);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void recurse(std::vector<Side>& sides, std::vector<Bipartition>& out) const {
    if (sides.size() == n_) {
      if (admissible(sides)) out.push_back(Bipartition{sides});
      return;
    }
    for (auto s : {Side::kNeither, Side::kX, Side::kY}) {
      sides.push_back(s);
      if (consistent_so_far(sides)) recurse(sides, out);
      sides.pop_back();
    }
  }

  /// Orthogonality among already assigned classes.
  bool consistent_so_far(const std::vector<Side>& sides) const {
    const auto last = sides.size() - 1;
    for (std::size_t a = 0; a < last; ++a) {
      if (sides[last] == Side::kX && sides[a] == Side::kY && hom_[last * n_ + a] != 0) return false;
      if (sides[last] == Side::kY && sides[a] == Side::kX && hom_[a * n_ + last] != 0) return false;
    }
    return true;
  }

  bool admissible(const std::vector<Side>& sides) const {
    bool has_x = false;
    bool has_y = false;
    for (std::size_t a = 0; a < n_; ++a) {
      has_x = has_x || sides[a] == Side::kX;
      has_y = has_y || sides[a] == Side::kY;
      if (sides[a] == Side::kX) {
        const auto below = shifted_[a * 2];
        if (below != kNone && classes_[a].shift - 1 >= lo_ && sides[below] != Side::kX) return false;
      }
      if (sides[a] == Side::kY) {
        const auto above = shifted_[a * 2 + 1];
        if (above != kNone && classes_[a].shift + 1 <= hi_ && sides[above] != Side::kY) return false;
      }
    }
    if (!has_x || !has_y) return false;

    if (rules_.bundle_at_every_shift) {
      for (int i = lo_; i <= hi_; ++i) {
        bool found = false;
        for (std::size_t a = 0; a < n_ && !found; ++a) {
          found = sides[a] == Side::kX && !classes_[a].sheaf.is_torsion() && classes_[a].shift == i;
        }
        if (!found) return false;
      }
    }
    if (rules_.tensor) {
      for (std::size_t a = 0; a < n_; ++a) {
        if (sides[a] != Side::kX || classes_[a].sheaf.is_torsion()) continue;
        for (std::size_t b = 0; b < n_; ++b) {
          if (!classes_[b].sheaf.is_torsion() && classes_[b].shift == classes_[a].shift && sides[b] != Side::kX) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::span<const ObjectClass> classes_;
  int lo_;
  int hi_;
  BipartitionRules rules_;
  std::size_t n_;
  std::vector<std::int64_t> hom_;
  std::vector<std::size_t> shifted_;  // [2a] = class a shifted by −1, [2a+1] = by +1
};

}  // namespace

std::vector<Bipartition> search_admissible_bipartitions(const CurveContext& ctx, std::span<const ObjectClass> classes,
                                                        int window_lo, int window_hi, const BipartitionRules& rules) {
  if (window_lo > window_hi) throw std::invalid_argument("empty shift window");
  if (rules.bundle_at_every_shift && ctx.genus() < 1) {
    throw std::invalid_argument("the bundle-at-every-shift rule needs genus at least 1");
  }
  for (const auto& c : classes) {
    if (c.shift < window_lo || c.shift > window_hi) {
      throw std::invalid_argument("class " + c.to_string() + " lies outside the shift window");
    }
  }
  const BipartitionSearch search(ctx, classes, window_lo, window_hi, rules);

  // Prefixes over the first one or two classes, run in lexicographic order.
  std::vector<std::vector<Side>> prefixes{{}};
  for (std::size_t depth = 0; depth < std::min<std::size_t>(2, classes.size()); ++depth) {
    std::vector<std::vector<Side>> next;
    for (const auto& p : prefixes) {
      for (auto s : {Side::kNeither, Side::kX, Side::kY}) {
        auto q = p;
        q.push_back(s);
        next.push_back(std::move(q));
      }
    }
    prefixes = std::move(next);
  }

  std::vector<std::vector<Bipartition>> results(prefixes.size());
  auto work = [&](std::size_t t) {
    // Orthogonality inside the prefix itself.
    const auto& p = prefixes[t];
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (p[a] == Side::kX && p[b] == Side::kY && hom_dim(ctx, classes[a], classes[b]) != 0) return;
      }
    }
    search.run_prefix(p, results[t]);
  };
  const auto workers = std::max<unsigned>(1, std::min<unsigned>(rules.parallelism, prefixes.size()));
  if (workers == 1) {
    for (std::size_t t = 0; t < prefixes.size(); ++t) work(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < prefixes.size(); t += workers) work(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Bipartition> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace tstruct::curve
