#include "flagcalc/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "flagcalc/errors.hpp"

namespace flagcalc {

int Degree::total() const {
  return std::accumulate(coords.begin(), coords.end(), 0);
}

bool Degree::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

bool Degree::is_effective() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
}

bool Degree::leq(const Degree& o) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] > o.coords[i]) return false;
  return true;
}

Degree Degree::operator+(const Degree& o) const {
  Degree r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Degree Degree::operator-(const Degree& o) const {
  Degree r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

std::string Degree::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ")";
  return os.str();
}

std::vector<Degree> degrees_up_to(std::size_t n, int bound) {
  std::vector<Degree> out;
  std::vector<int> c(n, 0);
  for (;;) {
    out.emplace_back(c);
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

std::vector<Degree> degrees_of_total_at_most(std::size_t n, int total) {
  std::vector<Degree> out;
  for (auto& d : degrees_up_to(n, total))
    if (d.total() <= total) out.push_back(d);
  std::stable_sort(out.begin(), out.end(),
                   [](const Degree& a, const Degree& b) { return a.total() < b.total(); });
  return out;
}

// ---------------------------------------------------------------------------

FlagVariety::FlagVariety(const WeylGroup& group, std::uint32_t levi_mask)
    : parabolic_(group, levi_mask) {
  build_graph();
}

FlagVariety::FlagVariety(const WeylGroup& group, const std::vector<int>& levi)
    : parabolic_(group, levi) {
  build_graph();
}

std::string FlagVariety::name() const {
  std::string s = group().roots().name() + "/{";
  bool first = true;
  for (int i : parabolic_.levi()) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

Degree FlagVariety::project(const IntVector& coroot_coords) const {
  Degree d;
  for (int i : parabolic_.non_levi()) d.coords.push_back(coroot_coords[i]);
  return d;
}

Degree FlagVariety::root_degree(int root_index) const {
  return project(group().roots().coroot(root_index));
}

Degree FlagVariety::push_degree(const Degree& d, const FlagVariety& target) const {
  if ((parabolic_.levi_mask() & ~target.parabolic().levi_mask()) != 0) {
    throw UsageError("target parabolic does not contain this one");
  }
  Degree out;
  const auto& mine = parabolic_.non_levi();
  for (int i : target.parabolic().non_levi()) {
    auto it = std::find(mine.begin(), mine.end(), i);
    out.coords.push_back(d.coords[it - mine.begin()]);
  }
  return out;
}

int FlagVariety::chern_degree(const Degree& d) const {
  int s = 0;
  for (std::size_t j = 0; j < d.size(); ++j) s += d.coords[j] * c1_[j];
  return s;
}

void FlagVariety::build_graph() {
  const auto& rs = group().roots();
  c1_.assign(degree_size(), 0);
  for (std::size_t j = 0; j < degree_size(); ++j) {
    int i = parabolic_.non_levi()[j];
    for (int g = 0; g < rs.num_positive(); ++g)
      if (!parabolic_.is_levi_root(g)) c1_[j] += rs.pair_with_simple_coroot(rs.root(g), i);
  }

  const std::size_t n = num_points();
  graph_.incident.assign(n, {});
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t a = 0; a < n; ++a) {
    WeylElement v = rep(a);
    for (int alpha = 0; alpha < rs.num_positive(); ++alpha) {
      if (parabolic_.is_levi_root(alpha)) continue;
      std::size_t b = point(group().multiply(v, group().reflection(alpha)));
      if (b == a) throw InternalConsistencyError("moment graph self-loop");
      Degree deg = root_degree(alpha);
      auto key = std::minmax(a, b);
      auto it = seen.find(key);
      if (it != seen.end()) {
        if (graph_.edges[it->second].degree != deg) {
          throw InternalConsistencyError("moment graph edge degrees disagree");
        }
        continue;
      }
      seen.emplace(key, graph_.edges.size());
      graph_.incident[a].push_back(graph_.edges.size());
      graph_.incident[b].push_back(graph_.edges.size());
      graph_.edges.push_back({a, b, group().act(v, alpha), alpha, deg});
    }
  }
}

// ---------------------------------------------------------------------------

Bitset translate_points(const FlagVariety& fv, WeylElement x, const Bitset& set) {
  Bitset out(set.size());
  for (auto p = set.find_first(); p != Bitset::npos; p = set.find_next(p)) {
    out.set(fv.point(fv.group().multiply(x, fv.rep(p))));
  }
  return out;
}

Bitset fixed_points(const FlagVariety& fv, const SchubertDescriptor& d) {
  const auto& par = fv.parabolic();
  std::size_t pos = par.position(d.element);
  Bitset base = d.side == Side::Schubert ? par.down(pos) : par.up(pos);
  if (!d.translation) return base;
  return translate_points(fv, *d.translation, base);
}

int descriptor_dimension(const FlagVariety& fv, const SchubertDescriptor& d) {
  int l = fv.group().length(d.element);
  return d.side == Side::Schubert ? l : fv.dimension() - l;
}

// ---------------------------------------------------------------------------

namespace {

using QueueItem = std::tuple<int, std::size_t, std::vector<int>>;

bool dominated(const std::vector<Degree>& labels, const Degree& d) {
  return std::any_of(labels.begin(), labels.end(), [&](const Degree& l) { return l.leq(d); });
}

// Pareto search. Labels at a vertex are only ever added in order of total
// degree, so a newly popped label can never dominate an existing one.
template <class Prune>
std::vector<std::vector<Degree>> pareto_search(
    const FlagVariety& fv, const Bitset& start, const std::optional<Degree>& cap, Prune prune,
    const std::function<void(std::size_t, const Degree&)>& on_label) {
  const auto& g = fv.graph();
  std::vector<std::vector<Degree>> labels(fv.num_points());
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
  const Degree zero = Degree::zero(fv.degree_size());
  for (auto p = start.find_first(); p != Bitset::npos; p = start.find_next(p)) {
    queue.emplace(0, p, zero.coords);
  }
  while (!queue.empty()) {
    auto [total, v, coords] = queue.top();
    queue.pop();
    Degree d(std::move(coords));
    if (dominated(labels[v], d) || prune(d)) continue;
    labels[v].push_back(d);
    on_label(v, d);
    for (std::size_t e : g.incident[v]) {
      const auto& edge = g.edges[e];
      std::size_t w = edge.a == v ? edge.b : edge.a;
      Degree nd = d + edge.degree;
      if (cap && !nd.leq(*cap)) continue;
      if (dominated(labels[w], nd)) continue;
      queue.emplace(nd.total(), w, nd.coords);
    }
  }
  return labels;
}

std::vector<Degree> minimal_elements(std::vector<Degree> ds) {
  std::vector<Degree> out;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (const auto& d : ds) {
    bool minimal =
        std::none_of(ds.begin(), ds.end(), [&](const Degree& o) { return o != d && o.leq(d); });
    if (minimal) out.push_back(d);
  }
  return out;
}

// Exhaustive minimal degrees from start to target, pruning anything that
// dominates a degree already known to hit the target.
std::vector<Degree> minimal_hits(const FlagVariety& fv, const Bitset& start, const Bitset& target) {
  std::vector<Degree> hits;
  pareto_search(
      fv, start, std::nullopt, [&](const Degree& d) { return dominated(hits, d); },
      [&](std::size_t v, const Degree& d) {
        if (target[v]) hits.push_back(d);
      });
  return minimal_elements(hits);
}

Degree unique_minimum(const std::vector<Degree>& mins, const std::string& what) {
  if (mins.size() != 1) {
    std::string msg = what + ": " + std::to_string(mins.size()) + " minimal degrees";
    for (const auto& m : mins) msg += " " + m.to_string();
    throw InternalConsistencyError(msg);
  }
  return mins.front();
}

}  // namespace

DegreeLabels::DegreeLabels(const FlagVariety& fv, const Bitset& start, std::optional<Degree> cap) {
  if (cap && !cap->is_effective()) throw InputError("negative degree coordinate");
  labels_ = pareto_search(
      fv, start, cap, [](const Degree&) { return false; }, [](std::size_t, const Degree&) {});
}

Bitset DegreeLabels::within(const Degree& d) const {
  Bitset out(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (dominated(labels_[v], d)) out.set(v);
  return out;
}

Bitset combinatorial_nbhd(const FlagVariety& fv, const Bitset& start, const Degree& d) {
  if (d.size() != fv.degree_size()) throw UsageError("degree has the wrong number of coordinates");
  if (!d.is_effective()) throw InputError("negative degree coordinate " + d.to_string());
  return DegreeLabels(fv, start, d).within(d);
}

WeylElement curve_element(const FlagVariety& fv, const Degree& d) {
  if (!d.is_effective()) throw InputError("negative degree coordinate " + d.to_string());
  const auto& g = fv.group();
  const auto& rs = g.roots();
  WeylElement z = g.identity();
  // Unwind z_d = s_alpha . z_{d - alpha^vee}: collect the chosen roots first.
  std::vector<int> chosen;
  Degree rest = d;
  while (!rest.is_zero()) {
    std::vector<int> candidates;
    for (int a = 0; a < rs.num_positive(); ++a) {
      if (fv.parabolic().is_levi_root(a)) continue;
      if (fv.root_degree(a).leq(rest)) candidates.push_back(a);
    }
    int best = -1;
    for (int a : candidates) {
      bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](int b) {
        if (b == a) return false;
        for (int i = 0; i < rs.rank(); ++i)
          if (rs.root(b)[i] < rs.root(a)[i]) return false;
        return true;
      });
      if (maximal) best = a;
    }
    if (best < 0) throw InternalConsistencyError("no root fits degree " + rest.to_string());
    chosen.push_back(best);
    rest = rest - fv.root_degree(best);
  }
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
    z = g.hecke_product(g.reflection(*it), z);
  }
  return z;
}

WeylElement curve_nbhd_weyl(const FlagVariety& fv, WeylElement w, Side side, const Degree& d,
                            bool verify) {
  const auto& g = fv.group();
  const auto& par = fv.parabolic();
  if (d.size() != fv.degree_size()) throw UsageError("degree has the wrong number of coordinates");
  if (!d.is_effective()) throw InputError("negative degree coordinate " + d.to_string());
  WeylElement result;
  if (side == Side::Schubert) {
    result = par.min_rep(g.hecke_product(w, curve_element(fv, d)));
  } else {
    WeylElement dual = par.min_rep(g.multiply(g.longest(), w));
    WeylElement y = par.min_rep(g.hecke_product(dual, curve_element(fv, d)));
    result = par.min_rep(g.multiply(g.longest(), y));
  }
  if (verify) {
    SchubertDescriptor start{side, par.min_rep(w), std::nullopt};
    SchubertDescriptor got{side, result, std::nullopt};
    if (combinatorial_nbhd(fv, fixed_points(fv, start), d) != fixed_points(fv, got)) {
      throw InternalConsistencyError("curve neighborhood of " + fv.name() + " element " +
                                     std::to_string(w.index) + " degree " + d.to_string() +
                                     " disagrees with the chain oracle");
    }
  }
  return result;
}

Degree min_connecting_degree(const FlagVariety& fv, WeylElement v, WeylElement u) {
  const auto& par = fv.parabolic();
  const Bitset& start = par.down(par.position(v));
  const Bitset& target = par.up(par.position(u));
  return unique_minimum(
      minimal_hits(fv, start, target),
      "dist(X_" + std::to_string(v.index) + ", X^" + std::to_string(u.index) + ")");
}

std::vector<Degree> min_connecting_degrees(const FlagVariety& fv, WeylElement v) {
  const auto& par = fv.parabolic();
  // Every connecting degree is bounded by a degree joining the point 1.P to
  // the point w_0.P, since X_1 lies in X_v and X^{w_0} in every X^u.
  Bitset origin(fv.num_points());
  origin.set(0);
  Bitset far(fv.num_points());
  far.set(par.position(par.longest_min_rep()));
  Degree cap = unique_minimum(minimal_hits(fv, origin, far), "dist(point, opposite point)");

  DegreeLabels labels(fv, par.down(par.position(v)), cap);
  std::vector<Degree> out;
  for (std::size_t u = 0; u < fv.num_points(); ++u) {
    std::vector<Degree> hits;
    const Bitset& target = par.up(u);
    for (auto x = target.find_first(); x != Bitset::npos; x = target.find_next(x)) {
      const auto& l = labels.labels(x);
      hits.insert(hits.end(), l.begin(), l.end());
    }
    out.push_back(unique_minimum(minimal_elements(hits), "dist(X_" + std::to_string(v.index) +
                                                             ", X^" + std::to_string(u) + ")"));
  }
  return out;
}

DistanceTable distance_table(const FlagVariety& fv) {
  DistanceTable t;
  for (std::size_t v = 0; v < fv.num_points(); ++v)
    t.push_back(min_connecting_degrees(fv, fv.rep(v)));
  return t;
}

Degree seidel_degree(const FlagVariety& fv, WeylElement w, WeylElement u) {
  const auto& g = fv.group();
  if (w == g.identity()) return Degree::zero(fv.degree_size());
  const auto& rs = g.roots();
  const int n = rs.rank();
  const int gamma = cominuscule_root_of(g, w);
  const std::vector<Rational> omega = rs.fundamental_coweight(gamma);
  std::vector<Rational> x = omega;
  Word word = g.reduced_word(g.inverse(u));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    Rational pairing(0);
    for (int k = 0; k < n; ++k) pairing += x[k] * Rational(rs.cartan()[k][j]);
    x[j] -= pairing;
  }
  IntVector diff(n);
  for (int k = 0; k < n; ++k) {
    Rational c = omega[k] - x[k];
    if (c.denominator() != 1) {
      throw InternalConsistencyError("Seidel degree is not in the coroot lattice");
    }
    diff[k] = static_cast<int>(c.numerator());
  }
  return fv.project(diff);
}

TranslatedNbhd gamma_e_translated(const FlagVariety& fv, WeylElement w, WeylElement u,
                                  const Degree& e) {
  const auto& g = fv.group();
  const auto& par = fv.parabolic();
  WeylElement wu = par.min_rep(g.multiply(w, u));
  WeylElement up = curve_nbhd_weyl(fv, wu, Side::Opposite, e);
  WeylElement winv = g.inverse(w);
  return {up, winv, translate_points(fv, winv, par.up(par.position(up)))};
}

bool dualpoint_check(const FlagVariety& fv, int gamma) {
  const auto& g = fv.group();
  const auto& par = fv.parabolic();
  std::uint32_t mask = 0;
  for (int i = 0; i < g.rank(); ++i)
    if (i != gamma) mask |= 1u << i;
  WeylElement w = Parabolic(g, mask).longest_min_rep();
  Bitset lhs = translate_points(fv, g.inverse(w), par.up(par.position(par.min_rep(w))));
  Bitset rhs = par.down(par.position(par.min_rep(g.multiply(g.longest(), w))));
  return lhs == rhs;
}

ProjectionCheck nbhd_projection_check(const FlagVariety& x, const FlagVariety& y1,
                                      const FlagVariety& y2, WeylElement u, const Degree& d) {
  return nbhd_projection_check(x, y1, y2, u, d, distance_table(x), distance_table(y1),
                               distance_table(y2));
}

ProjectionCheck nbhd_projection_check(const FlagVariety& x, const FlagVariety& y1,
                                      const FlagVariety& y2, WeylElement u, const Degree& d,
                                      const DistanceTable& dx, const DistanceTable& d1,
                                      const DistanceTable& d2) {
  const std::uint32_t m = x.parabolic().levi_mask();
  if (m != (y1.parabolic().levi_mask() & y2.parabolic().levi_mask())) {
    throw UsageError("Levi of P is not the intersection of the Levis of Q1 and Q2");
  }
  const auto& par = x.parabolic();
  ProjectionCheck out;

  WeylElement ux = curve_nbhd_weyl(x, par.min_rep(u), Side::Opposite, d);
  Bitset lhs = par.up(par.position(ux));
  Bitset rhs(x.num_points());
  rhs.set();
  for (const FlagVariety* y : {&y1, &y2}) {
    const auto& qp = y->parabolic();
    WeylElement ui = curve_nbhd_weyl(*y, qp.min_rep(u), Side::Opposite, x.push_degree(d, *y));
    const Bitset& up = qp.up(qp.position(ui));
    for (std::size_t p = 0; p < x.num_points(); ++p)
      if (!up[qp.coset_of(x.rep(p))]) rhs.reset(p);
  }
  out.fixed_sets_equal = lhs == rhs;

  out.dist_projection = true;
  const std::size_t upos = par.position(par.min_rep(u));
  for (std::size_t v = 0; v < x.num_points(); ++v) {
    const Degree& dist = dx[v][upos];
    const FlagVariety* ys[2] = {&y1, &y2};
    const DistanceTable* ts[2] = {&d1, &d2};
    for (int i = 0; i < 2; ++i) {
      const auto& qp = ys[i]->parabolic();
      std::size_t vi = qp.coset_of(x.rep(v));
      std::size_t ui = qp.coset_of(u);
      if (x.push_degree(dist, *ys[i]) != (*ts[i])[vi][ui]) out.dist_projection = false;
    }
  }
  return out;
}

}  // namespace flagcalc
