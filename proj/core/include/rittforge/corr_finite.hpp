#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rittforge {

/// Total relation on {0, ..., n-1}, n ≤ 64: row x is the bitmask of K(x).
class FiniteCorr {
 public:
  /// Throws DomainError on an empty row, a bit outside the ground set, or n ∉ [1, 64].
  FiniteCorr(int n, std::vector<std::uint64_t> rows);

  static FiniteCorr identity(int n);
  static FiniteCorr full(int n);
  /// Graph of x ↦ f[x].
  static FiniteCorr graph(const std::vector<int>& f);
  /// x ↦ S for every x.
  static FiniteCorr constant(int n, std::uint64_t image);

  int size() const { return n_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  std::uint64_t row(int x) const { return rows_[static_cast<std::size_t>(x)]; }
  /// Union of the rows of the points in `set`.
  std::uint64_t image_of(std::uint64_t set) const;

  bool is_map() const;
  bool is_surjective() const;
  bool is_constant() const;
  /// Largest image size.
  int degree() const;
  /// For maps: the point images. Throws DomainError otherwise.
  std::vector<int> as_map() const;

  std::string to_string() const;

  friend bool operator==(const FiniteCorr&, const FiniteCorr&) = default;
  friend auto operator<=>(const FiniteCorr& a, const FiniteCorr& b) { return a.rows_ <=> b.rows_; }

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

struct FiniteCorrHash {
  std::size_t operator()(const FiniteCorr& k) const;
};

/// (k2 ∘ k1)(x) = k2(k1(x)).
FiniteCorr compose(const FiniteCorr& k2, const FiniteCorr& k1);
/// Transpose; nullopt when it has an empty row (k not surjective).
std::optional<FiniteCorr> inverse(const FiniteCorr& k);
/// r1 ∘ r2⁻¹ for maps r1, r2 with r2 surjective; throws DomainError otherwise.
FiniteCorr block(const FiniteCorr& r1, const FiniteCorr& r2);

/// The 2^n - 1 constant correspondences, ordered by image bitmask.
std::vector<FiniteCorr> minimal_ideal(int n);
bool in_minimal_ideal(const FiniteCorr& k);
/// Left translation c ↦ k ∘ c on the minimal ideal, as indices into
/// minimal_ideal(n) (index = image bitmask - 1).
std::vector<int> alpha(const FiniteCorr& k);

std::vector<FiniteCorr> all_maps(int n);
/// Every total relation on n points.
std::vector<FiniteCorr> all_correspondences(int n);

/// A finite homomorphism table K ↦ φ(K); construction checks that the domain
/// is closed under composition and that φ is multiplicative.
class HomTable {
 public:
  /// Throws DomainError on a size mismatch, a non-closed domain or a
  /// multiplicativity failure.
  HomTable(std::vector<FiniteCorr> domain, std::vector<FiniteCorr> images);

  const std::vector<FiniteCorr>& domain() const { return domain_; }
  const std::vector<FiniteCorr>& images() const { return images_; }
  /// Throws DomainError when k is not in the domain.
  const FiniteCorr& operator()(const FiniteCorr& k) const;

 private:
  std::vector<FiniteCorr> domain_;
  std::vector<FiniteCorr> images_;
};

struct SchreierReport {
  std::vector<int> f;  ///< f(x) = value of φ(const_x)
  bool bijective = false;
  /// φ(K) ∘ f = f ∘ K held for every K (always true when extraction returns).
  bool equivariant = false;
  /// φ(K) = f ∘ K ∘ f⁻¹ for every K; only meaningful when bijective.
  bool conjugation = false;
};

/// Throws DomainError when some φ(const_x) is not a singleton constant or
/// when φ(K) ∘ f ≠ f ∘ K for some K.
SchreierReport schreier_extract(const HomTable& phi);

enum class Ambient { MapX, CorrX };

/// Every automorphism of Map(X) or Corr(X), sorted by image rows. Throws
/// BudgetError beyond n = 4 (MapX) or n = 3 (CorrX).
std::vector<HomTable> enumerate_automorphisms(int n, Ambient ambient);

/// Non-constant maps g1, g2 with g2 ∘ g1 constant, showing the ideal of
/// constants is not prime; nullopt when none exists (n ≤ 2).
std::optional<std::pair<FiniteCorr, FiniteCorr>> non_prime_witness(int n);

enum class VerifySuite { Schreier, Alpha, Blocks, Ideal, Aut };

/// "schreier", "alpha", "blocks", "ideal", "aut"; nullopt for anything else.
std::optional<VerifySuite> suite_from_name(std::string_view name);
std::string suite_name(VerifySuite s);

struct VerifyReport {
  VerifySuite suite = VerifySuite::Aut;
  int n = 0;
  Ambient ambient = Ambient::MapX;
  std::size_t checked = 0;  ///< number of cases examined
  bool pass = true;
  /// Aut suite only: automorphisms found and the expected n!.
  std::size_t automorphisms = 0;
  std::size_t expected = 0;
  /// At most five failing cases, each a short list of correspondences.
  std::vector<std::vector<FiniteCorr>> counterexamples;
};

/// Exhaustive desk-scale checks:
///  schreier  maps.corr on all pairs, then extraction for every automorphism;
///  alpha     injectivity of alpha and alpha(c) = c on the ideal;
///  blocks    r1∘r2⁻¹ for all maps with r2 surjective: full domain, right
///            cancellation and degree equal to the largest fiber;
///  ideal     K∘c constant and c∘K = c for every K and constant c, and a
///            non-prime witness for n ≥ 3;
///  aut       |Aut| = n!.
/// Throws BudgetError beyond n = 3 (n = 4 for alpha, blocks and MapX aut).
VerifyReport verify_suite(VerifySuite suite, int n, Ambient ambient = Ambient::MapX);

}  // namespace rittforge
