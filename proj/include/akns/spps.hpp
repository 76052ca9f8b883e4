#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "akns/jost_seed.hpp"

namespace akns {

/// The four series families: a_n (psi), a~_n (psi~), b_n (phi), b~_n (phi~).
enum class Family { A, ATIL, B, BTIL };

std::string_view family_name(Family family);

/// Coefficients c_{1,n}, c_{2,n} and their x-derivatives for n = 0..N at one node.
struct SeriesColumn {
  double x = 0.0;
  std::vector<cplx> c1, c2, c1_prime, c2_prime;
};

struct TableOptions {
  /// Nodes at which the full coefficient sequence is always retained.
  std::vector<double> probe_x{0.0};
  /// Keep every row on the whole grid. Memory grows as 4 (N + 1) grid fields.
  bool keep_rows = false;
  double overflow_limit = 1e100;
};

/// One family of series coefficients up to order N.
class CoefficientTable {
 public:
  Family family() const noexcept { return family_; }
  int order() const noexcept { return order_; }
  const GridPtr& grid() const noexcept { return grid_; }

  bool has_rows() const noexcept { return !c1_.empty(); }
  const ComplexField& c1(int n) const;
  const ComplexField& c2(int n) const;
  const ComplexField& c1_prime(int n) const;
  const ComplexField& c2_prime(int n) const;

  const std::vector<SeriesColumn>& probes() const noexcept { return probes_; }
  /// Column at a grid node: from a probe if one sits there, else from the rows.
  SeriesColumn column(std::size_t x_index) const;

 private:
  friend CoefficientTable compute_family(Family, const PotentialPair&, const SeedSet&, int,
                                         const TableOptions&);
  Family family_ = Family::A;
  int order_ = 0;
  GridPtr grid_;
  std::vector<std::size_t> probe_index_;
  std::vector<SeriesColumn> probes_;
  std::vector<ComplexField> c1_, c2_, c1p_, c2p_;
};

/// Runs the recurrent integration procedure for one family. Every step uses two
/// nested cumulative integrals; the exponential weights of the source terms are
/// folded into the quadrature so no stored quantity carries e^{+-x}, and the
/// seed ratio fields replace every division by q or r.
/// Throws OverflowError when an intermediate exceeds options.overflow_limit.
CoefficientTable compute_family(Family family, const PotentialPair& p, const SeedSet& seeds, int N,
                                const TableOptions& options = {});

/// All four families (index = static_cast<int>(Family)).
std::array<CoefficientTable, 4> compute_all_families(const PotentialPair& p, const SeedSet& seeds, int N,
                                                     const TableOptions& options = {},
                                                     unsigned threads = 1);

/// Both components of a Jost solution.
struct JostValue {
  cplx first;
  cplx second;
};

/// Truncated series for the family's Jost solution at (rho, x). For A and B,
/// Im rho >= 0 is required; for ATIL and BTIL, Im rho <= 0 (DomainError otherwise).
JostValue evaluate_series(Family family, const SeriesColumn& column, cplx rho);

/// Same, at a grid node of a table.
JostValue evaluate_jost(const CoefficientTable& table, cplx rho, std::size_t x_index);

/// Coefficient dump rows (n, c1_n, c2_n) at the table's probe nearest to x.
const SeriesColumn& probe_at(const CoefficientTable& table, double x);

}  // namespace akns
