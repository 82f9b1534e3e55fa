#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "acikit/classify.hpp"

namespace acik {

/// Result of the variable-pivot elimination: each pivot variable ends up
/// isolated at one diagonal cell and nowhere else.
struct PivotPlacement {
  std::vector<std::pair<std::string, int>> pivots;  // (variable, diagonal index)
  Equivalence witness;
};

struct ZeroBlockCertificate {
  int r = 0;  // zero block rows (bottom)
  int s = 0;  // zero block columns (left)
  Equivalence witness;
};

enum class BlockTag { triangular, minimal_fr, maximal_fr };
const char* block_tag_name(BlockTag t);

/// Half-open block coordinates inside the transformed matrix.
struct BlockDesc {
  BlockTag tag;
  int row0, row1, col0, col1;
  int rho;  // constant rank of the block
};

/// Which shape of the canonical block layout applies:
///  square    - the whole matrix triangularizes
///  wide      - constant rank m < n: [B *]
///  tall      - constant rank n < m: [*; C]
///  split     - zero block with blocks on both sides: [B * *; 0 0 *; 0 0 C]
///  top_only  - zero rows at the bottom: [B *; 0 0]
///  right_only- zero columns at the left: [0 *; 0 C]
enum class DecompCase { square, wide, tall, split, top_only, right_only };
const char* decomp_case_name(DecompCase c);

struct BlockDecomposition {
  DecompCase kind;
  int rho = 0;
  std::optional<int> r, s;  // zero block dimensions, when one exists
  std::optional<BlockDesc> B;  // full-row-rank side (top-left)
  std::optional<BlockDesc> C;  // full-column-rank side (bottom-right)
  Equivalence witness;
};

struct CoreCertificate {
  Equivalence witness;
  int rows = 0, cols = 0;  // the core is the top-left rows x cols block
  ACIMatrix core;
  int rho = 0;
};

/// Basis of { t in F^m : t * A[:, cols] is identically zero as polynomials }.
std::vector<std::vector<Fe>> constant_left_kernel(const ACIMatrix& A,
                                                  const std::vector<int>& cols);

/// For a constant-rank-rho matrix with rho < min{m, n}, finds T, Q putting an
/// r x s zero block in the lower-left corner with (m-r) + (n-s) = rho.
/// Scans column subsets by size, then lexicographically; the kernel rows of T
/// are placed last and the selected columns first.
ZeroBlockCertificate find_zero_block(const ACIMatrix& A, int rho, const Budgets& b = {});

/// Greedy elimination: repeatedly picks the first not-yet-covered entry
/// containing a variable (row-major scan of the untouched lower-right block,
/// lexicographic tie-break within the entry), moves it to the next diagonal
/// cell and removes that variable from every other row of its column.
std::pair<PivotPlacement, ACIMatrix> pivot_reduce(const ACIMatrix& A);

/// Witness with T A Q upper triangular with unit diagonal. Requires square
/// constant rank n; throws NotSquareFullRank otherwise.
Equivalence triangularize_square(const ACIMatrix& A, const Budgets& b = {});

struct WideReduction {
  BlockTag tag;  // triangular or minimal_fr
  int kept;      // columns of the surviving block B
  Equivalence witness;
};

/// For constant rank m < n: deletes deletable columns greedily (scan from
/// column 0, restarting after each deletion), defers them to the right, and
/// triangularizes the survivor when it ends up square.
WideReduction reduce_wide(const ACIMatrix& A, const Budgets& b = {});

struct TallReduction {
  BlockTag tag;   // triangular or maximal_fr
  int kept_rows;  // rows of the surviving block C (at the bottom)
  Equivalence witness;
};

/// For constant rank n < m: while an augmenting vector v exists, transforms
/// with a T sending v to e1 and strips the first row; the survivor is
/// non-augmentable (or square, then triangularized).
TallReduction reduce_tall(const ACIMatrix& A, const Budgets& b = {});

/// Full canonical block layout for any constant rank >= 1.
BlockDecomposition canonical_decomposition(const ACIMatrix& A, const Budgets& b = {});

/// Re-checks a decomposition from scratch: witness validity, exact zero
/// blocks, block tags and ranks. Throws VerificationFailed on any mismatch.
void verify_decomposition(const ACIMatrix& A, const BlockDecomposition& d, const Budgets& b = {});

/// Completely irreducible constant-rank block placed top-left by the witness.
/// The certificate is re-verified through classify before being returned.
CoreCertificate extract_core(const ACIMatrix& A, const Budgets& b = {});

enum class Filler { zeros, random };

struct CompositionResult {
  ACIMatrix matrix;  // [A11 A12; 0 A22]
  std::string top_kind, bottom_kind;      // square / minimal / maximal
  std::optional<bool> predicted_ci;       // nullopt: must be computed
};

/// Stacks two classified full-rank blocks into [A11 A12; 0 A22] and predicts
/// complete irreducibility where the composition table decides it.
CompositionResult compose_blocks(const ACIMatrix& A11, const ACIMatrix& A22, Filler filler,
                                 std::uint64_t seed = 0, const Budgets& b = {});

enum class GadgetChoice { none, minimal, maximal };

struct GenOptions {
  std::uint64_t seed = 0;
  GadgetChoice gadget = GadgetChoice::none;
  int max_vars = -1;  // < 0: derived from q so exhaustive checks stay cheap
};

/// Random ACI-matrix with rank_set exactly {rho}, assembled from unit upper
/// triangular blocks (or the small-field gadgets) and a random equivalence.
ACIMatrix gen_constant_rank(const Field& f, int m, int n, int rho, const GenOptions& opt = {});

/// 2 x (q+1) matrix of constant rank 2 with no deletable column.
ACIMatrix minimal_gadget(const Field& f);

/// 2q x (q+1) matrix of constant rank q+1 with no augmenting vector.
ACIMatrix maximal_gadget(const Field& f);

/// Random nonsingular T and random column permutation.
Equivalence random_equivalence(const Field& f, int m, int n, std::uint64_t seed);

}  // namespace acik
