#include "rittforge/corr_finite.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "rittforge/errors.hpp"

namespace rittforge {

namespace {

std::uint64_t ground_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t bit(int x) { return std::uint64_t{1} << x; }

using Index = std::unordered_map<FiniteCorr, int, FiniteCorrHash>;

Index make_index(const std::vector<FiniteCorr>& elems) {
  Index index;
  index.reserve(elems.size() * 2);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (!index.emplace(elems[k], static_cast<int>(k)).second) {
      throw DomainError("duplicate element in a homomorphism table: " + elems[k].to_string());
    }
  }
  return index;
}

// Multiplication table of a finite semigroup given by its elements:
// table[i * N + j] is the index of elems[i] ∘ elems[j].
std::vector<int> multiplication_table(const std::vector<FiniteCorr>& elems, const Index& index) {
  const std::size_t N = elems.size();
  std::vector<int> table(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      auto it = index.find(compose(elems[i], elems[j]));
      if (it == index.end()) throw DomainError("element set is not closed under composition");
      table[i * N + j] = it->second;
    }
  }
  return table;
}

// Automorphism-invariant data of an element: idempotency, index and period of
// its cyclic subsemigroup, sizes of its principal one-sided translates and
// counts of points it fixes under left and right translation.
std::vector<int> signature(int a, const std::vector<int>& table, int N) {
  auto mul = [&](int x, int y) { return table[static_cast<std::size_t>(x) * N + y]; };
  std::vector<int> first_seen(static_cast<std::size_t>(N), -1);
  int power = a, step = 1;
  while (first_seen[static_cast<std::size_t>(power)] < 0) {
    first_seen[static_cast<std::size_t>(power)] = step++;
    power = mul(power, a);
  }
  const int index = first_seen[static_cast<std::size_t>(power)];
  const int period = step - index;
  std::vector<char> left(static_cast<std::size_t>(N)), right(static_cast<std::size_t>(N));
  int left_size = 0, right_size = 0, left_fixed = 0, right_fixed = 0;
  for (int x = 0; x < N; ++x) {
    const int ax = mul(a, x), xa = mul(x, a);
    if (!left[static_cast<std::size_t>(ax)]++) ++left_size;
    if (!right[static_cast<std::size_t>(xa)]++) ++right_size;
    left_fixed += ax == x;
    right_fixed += xa == x;
  }
  return {mul(a, a) == a, index, period, left_size, right_size, left_fixed, right_fixed};
}

std::vector<int> generated(const std::vector<int>& gens, const std::vector<int>& table, int N) {
  std::vector<char> seen(static_cast<std::size_t>(N));
  std::vector<int> order;
  for (int g : gens) {
    if (!seen[static_cast<std::size_t>(g)]++) order.push_back(g);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int g : gens) {
      const int t = table[static_cast<std::size_t>(order[k]) * N + g];
      if (!seen[static_cast<std::size_t>(t)]++) order.push_back(t);
    }
  }
  return order;
}

// Depth-first search over generator images. Each partial assignment is
// propagated to the subsemigroup the assigned generators span; a clash with an
// earlier value or a repeated image prunes the branch.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const std::vector<int>& table, int N, std::vector<int> gens,
                     std::vector<std::vector<int>> candidates)
      : table_(table), N_(N), gens_(std::move(gens)), candidates_(std::move(candidates)) {}

  std::vector<std::vector<int>> run() {
    images_.assign(gens_.size(), -1);
    descend(0);
    return found_;
  }

 private:
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * N_ + y]; }

  // phi on the span of gens_[0..k], or empty on a conflict.
  std::vector<int> propagate(std::size_t k) const {
    std::vector<int> phi(static_cast<std::size_t>(N_), -1);
    std::vector<int> preimage(static_cast<std::size_t>(N_), -1);
    std::vector<int> order;
    auto assign = [&](int e, int value) {
      if (phi[static_cast<std::size_t>(e)] >= 0) return phi[static_cast<std::size_t>(e)] == value;
      if (preimage[static_cast<std::size_t>(value)] >= 0) return false;
      phi[static_cast<std::size_t>(e)] = value;
      preimage[static_cast<std::size_t>(value)] = e;
      order.push_back(e);
      return true;
    };
    for (std::size_t j = 0; j <= k; ++j) {
      if (!assign(gens_[j], images_[j])) return {};
    }
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const int e = order[idx];
      for (std::size_t j = 0; j <= k; ++j) {
        if (!assign(mul(e, gens_[j]), mul(phi[static_cast<std::size_t>(e)], images_[j]))) return {};
      }
    }
    return phi;
  }

  void descend(std::size_t k) {
    if (k == gens_.size()) {
      std::vector<int> phi = propagate(k - 1);
      if (phi.empty() || std::count(phi.begin(), phi.end(), -1) != 0) return;
      for (int x = 0; x < N_; ++x) {
        for (int y = 0; y < N_; ++y) {
          if (phi[static_cast<std::size_t>(mul(x, y))] != mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) {
            return;
          }
        }
      }
      found_.push_back(std::move(phi));
      return;
    }
    for (int candidate : candidates_[k]) {
      images_[k] = candidate;
      if (!propagate(k).empty()) descend(k + 1);
    }
    images_[k] = -1;
  }

  const std::vector<int>& table_;
  int N_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> images_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

FiniteCorr::FiniteCorr(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 1 || n > 64) throw DomainError("ground set size must lie in [1, 64]");
  if (rows_.size() != static_cast<std::size_t>(n)) throw DomainError("incidence needs one row per point");
  for (std::uint64_t r : rows_) {
    if (r == 0) throw DomainError("correspondence with an empty image (domain must be the whole set)");
    if ((r & ~ground_mask(n)) != 0) throw DomainError("image outside the ground set");
  }
}

FiniteCorr FiniteCorr::identity(int n) {
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  return graph(f);
}

FiniteCorr FiniteCorr::full(int n) { return constant(n, ground_mask(n)); }

FiniteCorr FiniteCorr::graph(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<std::uint64_t> rows;
  rows.reserve(f.size());
  for (int y : f) {
    if (y < 0 || y >= n) throw DomainError("map value outside the ground set");
    rows.push_back(bit(y));
  }
  return FiniteCorr(n, std::move(rows));
}

FiniteCorr FiniteCorr::constant(int n, std::uint64_t image) {
  return FiniteCorr(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), image));
}

std::uint64_t FiniteCorr::image_of(std::uint64_t set) const {
  std::uint64_t out = 0;
  for (int x = 0; x < n_; ++x) {
    if (set & bit(x)) out |= rows_[static_cast<std::size_t>(x)];
  }
  return out;
}

bool FiniteCorr::is_map() const {
  return std::all_of(rows_.begin(), rows_.end(), [](std::uint64_t r) { return std::popcount(r) == 1; });
}

bool FiniteCorr::is_surjective() const { return image_of(ground_mask(n_)) == ground_mask(n_); }

bool FiniteCorr::is_constant() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](std::uint64_t r) { return r == rows_.front(); });
}

int FiniteCorr::degree() const {
  int d = 0;
  for (std::uint64_t r : rows_) d = std::max(d, std::popcount(r));
  return d;
}

std::vector<int> FiniteCorr::as_map() const {
  if (!is_map()) throw DomainError("correspondence is not a map: " + to_string());
  std::vector<int> f;
  f.reserve(rows_.size());
  for (std::uint64_t r : rows_) f.push_back(std::countr_zero(r));
  return f;
}

std::string FiniteCorr::to_string() const {
  std::ostringstream out;
  out << "{";
  for (int x = 0; x < n_; ++x) {
    out << (x ? ", " : "") << x << "->{";
    bool first = true;
    for (int y = 0; y < n_; ++y) {
      if (rows_[static_cast<std::size_t>(x)] & bit(y)) {
        out << (first ? "" : ",") << y;
        first = false;
      }
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

std::size_t FiniteCorrHash::operator()(const FiniteCorr& k) const {
  std::size_t h = static_cast<std::size_t>(k.size());
  for (std::uint64_t r : k.rows()) h = h * 0x100000001b3ULL ^ static_cast<std::size_t>(r);
  return h;
}

FiniteCorr compose(const FiniteCorr& k2, const FiniteCorr& k1) {
  if (k1.size() != k2.size()) throw DomainError("composition of correspondences on different sets");
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(k1.size()));
  // Nonempty because every row of k1 is nonempty and k2 is total.
  for (std::uint64_t r : k1.rows()) rows.push_back(k2.image_of(r));
  return FiniteCorr(k1.size(), std::move(rows));
}

std::optional<FiniteCorr> inverse(const FiniteCorr& k) {
  const int n = k.size();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (k.row(x) & bit(y)) rows[static_cast<std::size_t>(y)] |= bit(x);
    }
  }
  if (std::find(rows.begin(), rows.end(), 0) != rows.end()) return std::nullopt;
  return FiniteCorr(n, std::move(rows));
}

FiniteCorr block(const FiniteCorr& r1, const FiniteCorr& r2) {
  if (!r1.is_map() || !r2.is_map()) throw DomainError("block needs two maps");
  if (!r2.is_surjective()) throw DomainError("block needs a surjective right map");
  return compose(r1, *inverse(r2));
}

std::vector<FiniteCorr> minimal_ideal(int n) {
  if (n < 1 || n > 20) throw BudgetError("minimal ideal enumeration supports 1 ≤ n ≤ 20");
  std::vector<FiniteCorr> out;
  for (std::uint64_t s = 1; s <= ground_mask(n); ++s) out.push_back(FiniteCorr::constant(n, s));
  return out;
}

bool in_minimal_ideal(const FiniteCorr& k) { return k.is_constant(); }

std::vector<int> alpha(const FiniteCorr& k) {
  if (k.size() > 20) throw BudgetError("alpha table supports n ≤ 20");
  std::vector<int> table;
  for (std::uint64_t s = 1; s <= ground_mask(k.size()); ++s) {
    // k ∘ (x ↦ S) is x ↦ k(S).
    table.push_back(static_cast<int>(k.image_of(s)) - 1);
  }
  return table;
}

std::vector<FiniteCorr> all_maps(int n) {
  if (n < 1 || n > 6) throw BudgetError("map enumeration supports 1 ≤ n ≤ 6");
  std::vector<FiniteCorr> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(FiniteCorr::graph(f));
    int pos = 0;
    while (pos < n && ++f[static_cast<std::size_t>(pos)] == n) f[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteCorr> all_correspondences(int n) {
  if (n < 1 || n > 4) throw BudgetError("correspondence enumeration supports 1 ≤ n ≤ 4");
  const std::uint64_t top = ground_mask(n);
  std::vector<FiniteCorr> out;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(n, rows);
    int pos = 0;
    while (pos < n && rows[static_cast<std::size_t>(pos)] == top) rows[static_cast<std::size_t>(pos++)] = 1;
    if (pos == n) break;
    ++rows[static_cast<std::size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomTable::HomTable(std::vector<FiniteCorr> domain, std::vector<FiniteCorr> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (domain_.size() != images_.size()) throw DomainError("homomorphism table needs one image per element");
  const Index index = make_index(domain_);
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    for (std::size_t j = 0; j < domain_.size(); ++j) {
      auto it = index.find(compose(domain_[i], domain_[j]));
      if (it == index.end()) throw DomainError("homomorphism domain is not closed under composition");
      if (images_[static_cast<std::size_t>(it->second)] != compose(images_[i], images_[j])) {
        throw DomainError("table is not multiplicative at " + domain_[i].to_string() + " ∘ " + domain_[j].to_string());
      }
    }
  }
}

const FiniteCorr& HomTable::operator()(const FiniteCorr& k) const {
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i] == k) return images_[i];
  }
  throw DomainError("correspondence outside the table domain: " + k.to_string());
}

SchreierReport schreier_extract(const HomTable& phi) {
  if (phi.domain().empty()) throw DomainError("empty homomorphism table");
  const int n = phi.domain().front().size();
  SchreierReport report;
  int target_size = 0;
  for (int x = 0; x < n; ++x) {
    const FiniteCorr& image = phi(FiniteCorr::constant(n, bit(x)));
    if (!image.is_constant() || std::popcount(image.row(0)) != 1) {
      throw DomainError("image of the constant " + std::to_string(x) + " is not a constant map: " + image.to_string());
    }
    report.f.push_back(std::countr_zero(image.row(0)));
    target_size = image.size();
  }
  // f applied to a set of points.
  auto push = [&](std::uint64_t set) {
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x) {
      if (set & bit(x)) out |= bit(report.f[static_cast<std::size_t>(x)]);
    }
    return out;
  };
  for (std::size_t i = 0; i < phi.domain().size(); ++i) {
    const FiniteCorr& K = phi.domain()[i];
    const FiniteCorr& image = phi.images()[i];
    for (int x = 0; x < n; ++x) {
      if (image.row(report.f[static_cast<std::size_t>(x)]) != push(K.row(x))) {
        throw DomainError("φ(K)∘f ≠ f∘K for K = " + K.to_string());
      }
    }
  }
  report.equivariant = true;
  std::vector<int> sorted = report.f;
  std::sort(sorted.begin(), sorted.end());
  report.bijective = target_size == n && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (report.bijective) {
    std::vector<int> f_inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) f_inv[static_cast<std::size_t>(report.f[static_cast<std::size_t>(x)])] = x;
    report.conjugation = true;
    for (std::size_t i = 0; i < phi.domain().size() && report.conjugation; ++i) {
      for (int y = 0; y < n; ++y) {
        if (phi.images()[i].row(y) != push(phi.domain()[i].row(f_inv[static_cast<std::size_t>(y)]))) {
          report.conjugation = false;
          break;
        }
      }
    }
  }
  return report;
}

std::vector<HomTable> enumerate_automorphisms(int n, Ambient ambient) {
  if (n < 1) throw DomainError("ground set must be nonempty");
  if (ambient == Ambient::MapX && n > 4) throw BudgetError("Aut(Map(X)) enumeration is limited to n ≤ 4");
  if (ambient == Ambient::CorrX && n > 3) throw BudgetError("Aut(Corr(X)) enumeration is limited to n ≤ 3");
  const std::vector<FiniteCorr> elems = ambient == Ambient::MapX ? all_maps(n) : all_correspondences(n);
  const int N = static_cast<int>(elems.size());
  const Index index = make_index(elems);
  const std::vector<int> table = multiplication_table(elems, index);

  std::vector<std::vector<int>> sig;
  sig.reserve(elems.size());
  for (int a = 0; a < N; ++a) sig.push_back(signature(a, table, N));

  // Greedy generating set, preferring elements with large left translates
  // (permutations first for Map(X)).
  std::vector<int> order(static_cast<std::size_t>(N));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sig[x][3] > sig[y][3]; });
  std::vector<int> gens;
  std::vector<char> covered(static_cast<std::size_t>(N));
  for (int a : order) {
    if (covered[static_cast<std::size_t>(a)]) continue;
    gens.push_back(a);
    std::fill(covered.begin(), covered.end(), 0);
    for (int e : generated(gens, table, N)) covered[static_cast<std::size_t>(e)] = 1;
  }

  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> c;
    for (int a = 0; a < N; ++a) {
      if (sig[static_cast<std::size_t>(a)] == sig[static_cast<std::size_t>(g)]) c.push_back(a);
    }
    candidates.push_back(std::move(c));
  }

  std::vector<HomTable> out;
  for (const std::vector<int>& phi : AutomorphismSearch(table, N, gens, candidates).run()) {
    std::vector<FiniteCorr> images;
    images.reserve(elems.size());
    for (int v : phi) images.push_back(elems[static_cast<std::size_t>(v)]);
    out.emplace_back(elems, std::move(images));
  }
  std::sort(out.begin(), out.end(), [](const HomTable& x, const HomTable& y) { return x.images() < y.images(); });
  return out;
}

std::optional<std::pair<FiniteCorr, FiniteCorr>> non_prime_witness(int n) {
  if (n > 4) throw BudgetError("non-prime witness search is limited to n ≤ 4");
  const std::vector<FiniteCorr> maps = all_maps(n);
  for (const FiniteCorr& g1 : maps) {
    if (g1.is_constant()) continue;
    for (const FiniteCorr& g2 : maps) {
      if (!g2.is_constant() && compose(g2, g1).is_constant()) return std::make_pair(g1, g2);
    }
  }
  return std::nullopt;
}

std::optional<VerifySuite> suite_from_name(std::string_view name) {
  if (name == "schreier") return VerifySuite::Schreier;
  if (name == "alpha") return VerifySuite::Alpha;
  if (name == "blocks") return VerifySuite::Blocks;
  if (name == "ideal") return VerifySuite::Ideal;
  if (name == "aut") return VerifySuite::Aut;
  return std::nullopt;
}

std::string suite_name(VerifySuite s) {
  switch (s) {
    case VerifySuite::Schreier:
      return "schreier";
    case VerifySuite::Alpha:
      return "alpha";
    case VerifySuite::Blocks:
      return "blocks";
    case VerifySuite::Ideal:
      return "ideal";
    case VerifySuite::Aut:
      return "aut";
  }
  return "?";
}

namespace {

void record(VerifyReport& r, std::vector<FiniteCorr> witness) {
  r.pass = false;
  if (r.counterexamples.size() < 5) r.counterexamples.push_back(std::move(witness));
}

void verify_schreier(VerifyReport& r) {
  const std::vector<FiniteCorr> corr = all_correspondences(r.n);
  for (const FiniteCorr& k1 : corr) {
    for (const FiniteCorr& k2 : corr) {
      if (!k2.is_surjective() || !compose(k1, k2).is_map()) continue;
      ++r.checked;
      if (!k1.is_map()) record(r, {k1, k2});
    }
  }
  for (const HomTable& phi : enumerate_automorphisms(r.n, r.ambient)) {
    ++r.checked;
    try {
      const SchreierReport s = schreier_extract(phi);
      if (!s.bijective || !s.conjugation) record(r, {FiniteCorr::graph(s.f)});
    } catch (const DomainError&) {
      record(r, phi.images());
    }
  }
}

void verify_alpha(VerifyReport& r) {
  std::map<std::vector<int>, FiniteCorr> seen;
  for (const FiniteCorr& k : all_correspondences(r.n)) {
    ++r.checked;
    auto [it, fresh] = seen.emplace(alpha(k), k);
    if (!fresh) record(r, {it->second, k});
  }
  const std::vector<FiniteCorr> ideal = minimal_ideal(r.n);
  for (std::size_t c = 0; c < ideal.size(); ++c) {
    ++r.checked;
    const std::vector<int> t = alpha(ideal[c]);
    if (!std::all_of(t.begin(), t.end(), [&](int v) { return v == static_cast<int>(c); })) record(r, {ideal[c]});
  }
}

void verify_blocks(VerifyReport& r) {
  const std::vector<FiniteCorr> maps = all_maps(r.n);
  for (const FiniteCorr& r1 : maps) {
    for (const FiniteCorr& r2 : maps) {
      ++r.checked;
      if (!r2.is_surjective()) {
        bool rejected = false;
        try {
          block(r1, r2);
        } catch (const DomainError&) {
          rejected = true;
        }
        if (!rejected) record(r, {r1, r2});
        continue;
      }
      const FiniteCorr b = block(r1, r2);
      // x ↦ r1(r2⁻¹(x)) counted point by point.
      int widest = 0;
      for (int x = 0; x < r.n; ++x) {
        std::uint64_t image = 0;
        for (int y = 0; y < r.n; ++y) {
          if (r2.row(y) == bit(x)) image |= r1.row(y);
        }
        widest = std::max(widest, std::popcount(image));
      }
      if (compose(b, r2) != r1 || b.degree() != widest) record(r, {r1, r2, b});
    }
  }
}

void verify_ideal(VerifyReport& r) {
  const std::vector<FiniteCorr> ideal = minimal_ideal(r.n);
  const std::vector<FiniteCorr> corr = all_correspondences(r.n);
  for (const FiniteCorr& k : corr) {
    for (const FiniteCorr& c : ideal) {
      ++r.checked;
      if (!compose(k, c).is_constant() || compose(c, k) != c) record(r, {k, c});
    }
    // Membership agrees with the absorption property k∘K = k for every K.
    ++r.checked;
    const bool absorbing =
        std::all_of(corr.begin(), corr.end(), [&](const FiniteCorr& other) { return compose(k, other) == k; });
    if (in_minimal_ideal(k) != absorbing) record(r, {k});
  }
  if (r.n >= 3) {
    ++r.checked;
    if (!non_prime_witness(r.n)) r.pass = false;
  }
}

}  // namespace

VerifyReport verify_suite(VerifySuite suite, int n, Ambient ambient) {
  if (n < 1) throw DomainError("ground set must have at least one point");
  const int limit = (suite == VerifySuite::Alpha || suite == VerifySuite::Blocks ||
                     (suite == VerifySuite::Aut && ambient == Ambient::MapX))
                        ? 4
                        : 3;
  if (n > limit) {
    throw BudgetError("suite " + suite_name(suite) + " is limited to n ≤ " + std::to_string(limit));
  }
  VerifyReport r;
  r.suite = suite;
  r.n = n;
  r.ambient = ambient;
  switch (suite) {
    case VerifySuite::Schreier:
      verify_schreier(r);
      break;
    case VerifySuite::Alpha:
      verify_alpha(r);
      break;
    case VerifySuite::Blocks:
      verify_blocks(r);
      break;
    case VerifySuite::Ideal:
      verify_ideal(r);
      break;
    case VerifySuite::Aut: {
      const auto autos = enumerate_automorphisms(n, ambient);
      r.automorphisms = autos.size();
      r.expected = 1;
      for (int k = 2; k <= n; ++k) r.expected *= static_cast<std::size_t>(k);
      r.checked = autos.size();
      r.pass = r.automorphisms == r.expected;
      break;
    }
  }
  return r;
}

}  // namespace rittforge
