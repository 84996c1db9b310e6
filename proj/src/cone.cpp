#include "exo/cone.hpp"

#include <algorithm>
#include <set>

namespace exo {

namespace {

// Pointed double description: extreme rays of {y in Q^r : B y >= 0} where B
// has full column rank r. Seeded from an invertible r x r subsystem, then the
// remaining constraints are inserted one at a time with the algebraic
// adjacency test (common active constraints of rank r-2).
std::vector<IntVec> pointed_dd(const std::vector<IntVec>& b, std::size_t r) {
  if (r == 0) return {};
  // Seed: r linearly independent rows.
  std::vector<std::size_t> seed;
  {
    RatMatrix work(b.size(), r);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) work.at(i, j) = Rat(b[i][j]);
    std::vector<std::size_t> rows(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rows[i] = i;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t p = lead;
      while (p < b.size() && work.at(p, c) == 0) ++p;
      if (p == b.size()) continue;
      for (std::size_t j = 0; j < r; ++j) std::swap(work.at(lead, j), work.at(p, j));
      std::swap(rows[lead], rows[p]);
      for (std::size_t i = lead + 1; i < b.size(); ++i) {
        if (work.at(i, c) == 0) continue;
        Rat f = work.at(i, c) / work.at(lead, c);
        for (std::size_t j = 0; j < r; ++j) work.at(i, j) -= f * work.at(lead, j);
      }
      seed.push_back(rows[lead]);
      ++lead;
    }
    if (seed.size() != r) throw std::logic_error("pointed_dd: constraints not full rank");
  }

  // Initial rays: columns of the inverse of the seed subsystem.
  std::vector<IntVec> rays;
  {
    RatMatrix bs(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) bs.at(i, j) = Rat(b[seed[i]][j]);
    for (std::size_t k = 0; k < r; ++k) {
      RatVec e(r, Rat(0));
      e[k] = 1;
      auto s = solve_rational(bs, e);
      if (s.kind != SolveKind::Unique) throw std::logic_error("pointed_dd: singular seed");
      rays.push_back(primitive_direction(s.point));
    }
  }

  std::vector<std::size_t> processed = seed;
  auto pairing = [&](const IntVec& ray, std::size_t ci) { return dot(b[ci], ray); };

  std::set<std::size_t> in_seed(seed.begin(), seed.end());
  for (std::size_t c = 0; c < b.size(); ++c) {
    if (in_seed.count(c)) continue;
    std::vector<IntVec> keep, neg;
    std::vector<Int> keep_val, neg_val;
    for (auto& ray : rays) {
      Int v = pairing(ray, c);
      if (v >= 0) {
        keep.push_back(ray);
        keep_val.push_back(v);
      } else {
        neg.push_back(ray);
        neg_val.push_back(v);
      }
    }
    if (!neg.empty()) {
      std::size_t n_keep = keep.size();
      for (std::size_t pi = 0; pi < n_keep; ++pi) {
        if (keep_val[pi] == 0) continue;
        for (std::size_t ni = 0; ni < neg.size(); ++ni) {
          // adjacency: common active constraints span a ridge
          std::vector<IntVec> common;
          for (auto ci : processed)
            if (pairing(keep[pi], ci) == 0 && pairing(neg[ni], ci) == 0) common.push_back(b[ci]);
          if (rank_of_rows(common) != r - 2) continue;
          IntVec w = sub(scale(keep_val[pi], neg[ni]), scale(neg_val[ni], keep[pi]));
          keep.push_back(primitive(w));
          keep_val.push_back(0);
        }
      }
    }
    rays = std::move(keep);
    processed.push_back(c);
  }
  // Deduplicate (combinations can reproduce an existing ray).
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace

GeneratorDescription enumerate_generators(const std::vector<IntVec>& inequalities,
                                          std::size_t rank) {
  std::vector<IntVec> rows;
  for (const auto& a : inequalities) {
    if (a.size() != rank) throw std::invalid_argument("enumerate_generators: rank mismatch");
    if (!is_zero(a)) rows.push_back(a);
  }
  GeneratorDescription out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < rank; ++i) {
      IntVec e(rank, Int(0));
      e[i] = 1;
      out.lineality.push_back(e);
    }
    return out;
  }
  IntMatrix a = IntMatrix::from_rows(rows, rank);
  // Lineality: saturated kernel of the constraint matrix.
  out.lineality = integer_kernel(a);
  std::size_t r = rank - out.lineality.size();
  if (r == 0) return out;

  // Complement basis: with A = U S V, the first r columns of V^{-1} span a
  // complement of the kernel (the kernel being the remaining columns).
  SmithDecomposition d = smith_normal_form(a);
  std::vector<IntVec> comp;
  for (std::size_t j = 0; j < r; ++j) comp.push_back(d.v_inv.col(j));

  std::vector<IntVec> b(rows.size(), IntVec(r));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < r; ++k) b[i][k] = dot(rows[i], comp[k]);

  for (const auto& y : pointed_dd(b, r)) {
    IntVec x(rank, Int(0));
    for (std::size_t k = 0; k < r; ++k) x = add(x, scale(y[k], comp[k]));
    out.rays.push_back(primitive(x));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  return out;
}

Cone::Cone(std::size_t rank, Side side, std::vector<IntVec> generators)
    : rank_(rank), side_(side), generators_(std::move(generators)) {}

const std::vector<IntVec>& Cone::facets() const {
  std::call_once(lazy_->once, [this] {
    GeneratorDescription d = enumerate_generators(generators_, rank_);
    std::vector<IntVec> f = d.rays;
    for (const auto& l : d.lineality) {
      f.push_back(l);
      f.push_back(negate(l));
    }
    lazy_->facets = std::move(f);
  });
  return lazy_->facets;
}

Cone make_cone(std::size_t rank, Side side, const std::vector<IntVec>& generators) {
  std::vector<IntVec> gens;
  for (const auto& g : generators) {
    if (g.size() != rank) throw std::invalid_argument("make_cone: rank mismatch");
    if (is_zero(g)) throw std::invalid_argument("make_cone: zero generator");
    IntVec p = primitive(g);
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
  }
  return Cone(rank, side, std::move(gens));
}

Cone zero_cone(std::size_t rank, Side side) { return Cone(rank, side, {}); }

Cone dual_cone(const Cone& c) {
  GeneratorDescription d = enumerate_generators(c.generators(), c.ambient_rank());
  std::vector<IntVec> gens = d.rays;
  for (const auto& l : d.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return Cone(c.ambient_rank(), dual_side(c.side()), std::move(gens));
}

bool contains(const Cone& c, const RatVec& v) {
  if (v.size() != c.ambient_rank()) throw std::invalid_argument("contains: rank mismatch");
  for (const auto& f : c.facets())
    if (dot(v, f) < 0) return false;
  return true;
}

bool contains(const Cone& c, const IntVec& v) { return contains(c, to_rat(v)); }

bool cone_subset(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("cone_subset: rank mismatch");
  for (const auto& g : a.generators())
    if (!contains(b, g)) return false;
  return true;
}

bool cones_equal(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank() || a.side() != b.side())
    throw std::invalid_argument("cones_equal: incompatible cones");
  return cone_subset(a, b) && cone_subset(b, a);
}

std::size_t lineality_rank(const Cone& c) {
  if (c.generators().empty()) return 0;
  return c.ambient_rank() - rank_of_rows(c.facets());
}

bool is_strictly_convex(const Cone& c) { return lineality_rank(c) == 0; }

std::size_t dim(const Cone& c) { return rank_of_rows(c.generators()); }

std::vector<IntVec> extreme_rays(const Cone& c) {
  if (!is_strictly_convex(c)) throw std::invalid_argument("extreme_rays: cone has lineality");
  std::vector<IntVec> out;
  for (const auto& g : c.generators()) {
    std::vector<IntVec> active;
    for (const auto& f : c.facets())
      if (dot(f, g) == 0) active.push_back(f);
    if (rank_of_rows(active) == c.ambient_rank() - 1) out.push_back(g);
  }
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank() || a.side() != b.side())
    throw std::invalid_argument("intersect: incompatible cones");
  std::vector<IntVec> ineqs = a.facets();
  for (const auto& f : b.facets()) ineqs.push_back(f);
  GeneratorDescription d = enumerate_generators(ineqs, a.ambient_rank());
  std::vector<IntVec> gens = d.rays;
  for (const auto& l : d.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return Cone(a.ambient_rank(), a.side(), std::move(gens));
}

bool is_face_of(const Cone& f, const Cone& c) {
  if (!cone_subset(f, c)) return false;
  // w: sum of the facet normals of c active on all of f; the smallest face of
  // c containing f is c cut by w.
  IntVec w(c.ambient_rank(), Int(0));
  for (const auto& n : c.facets()) {
    bool active = true;
    for (const auto& g : f.generators())
      if (dot(n, g) != 0) {
        active = false;
        break;
      }
    if (active) w = add(w, n);
  }
  std::vector<IntVec> face_gens;
  for (const auto& g : c.generators())
    if (dot(w, g) == 0) face_gens.push_back(g);
  Cone face(c.ambient_rank(), c.side(), std::move(face_gens));
  return cone_subset(face, f) && cone_subset(f, face);
}

}  // namespace exo
