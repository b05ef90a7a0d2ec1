#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hpcoh/schouten_complex.hpp"

namespace hpcoh {

using BidegreeTable = std::map<Bidegree, std::size_t>;

struct FirstPage {
  BidegreeTable e1;        // E_1^{p,q} = H^q(g^{p,0})
  BidegreeTable d1_rank;   // rank of d_1 : E_1^{p,q} -> E_1^{p+1,q}
  bool degenerate = true;  // every computed d_1 vanishes
};

enum class ObstructionKind { trivial_action, solvable, unsolvable };
std::string_view to_string(ObstructionKind k);

struct ObstructionResult {
  ObstructionKind kind = ObstructionKind::unsolvable;
  int v_index = -1;
  std::vector<int> t_indices;  // basis of t^{1,0} used for the coordinates below
  Vector x;                    // coordinates of X on t_indices when solvable
  GradedElement x_element;     // X itself
  GradedElement lambda;        // V ^ T
  GradedElement ad_rho_bar;    // [Lambda, rho_bar]
};

struct DegreeComparison {
  int degree = 0;
  std::size_t h_lambda = 0;
  std::size_t sum_hpq = 0;
  bool equal() const { return h_lambda == sum_hpq; }
};

struct HodgeVerdict {
  bool hodge = false;            // equality in every computed degree
  bool theorem_implied = false;  // equality is forced by the hypotheses on Lambda
  std::vector<DegreeComparison> degrees;
};

struct DeformedResult {
  std::vector<std::size_t> dims;                // dim of cohomology of delta in degree d
  std::vector<GradedElement> generator_images;  // delta(g) for each generator g of L
  std::vector<GradedElement> kernel_k1;         // basis of ker(delta) on K^1
  bool square_zero = false;
};

struct CohomologyReport {
  std::string name;
  std::string poisson;  // canonical rendering of Lambda
  int dim_L = 0;
  int max_degree = 0;
  BidegreeTable hpq;
  std::vector<std::size_t> hn_lambda;
  BidegreeTable e1_d1_ranks;
  BidegreeTable e2;
  bool degenerate = true;
  bool degeneracy_theorem_backed = false;  // cross-checked against the obstruction solver
  HodgeVerdict hodge;
  std::optional<ObstructionResult> obstruction;
};

// All computations on invariant forms of one algebra. Ranks of dbar blocks and
// of total differentials are cached, so the report, the first page and the
// verdicts share work.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(AlgebraSpec spec);

  const SchoutenComplex& complex() const noexcept { return complex_; }
  int clamp_degree(int max_degree) const;

  // dim H^q(g^{p,0}) for p + q <= max_degree.
  BidegreeTable dolbeault_dims(int max_degree) const;

  // dim H^d_Lambda for d = 0..max_degree, from ranks of dbar + ad_Lambda on K^d.
  std::vector<std::size_t> total_cohomology(const GradedElement& lambda, int max_degree) const;

  FirstPage first_page(const GradedElement& lambda, int max_degree) const;
  BidegreeTable second_page(const FirstPage& page) const;

  // Solves iota_T d(rho_bar) = -iota_X d(rho) for Lambda = V ^ T.
  // Throws Error(center_dimension_not_one | center_not_coordinate | t_not_in_layer).
  ObstructionResult obstruction(const GradedElement& t) const;

  // If Lambda = V ^ T with V spanning a one-dimensional c^{1,0} and T in the
  // top non-central layer, returns T.
  std::optional<GradedElement> split_v_wedge_t(const GradedElement& lambda) const;

  // Throws ConsistencyError when dim H^d_Lambda exceeds the Dolbeault sum, or
  // when equality is theorem-implied but not observed.
  HodgeVerdict hodge_verdict(const GradedElement& lambda, int max_degree) const;

  // Cohomology of delta = dbar + ad_Lambda + [omega_bar, -]. Throws
  // Error(not_bidegree_0_2 | not_integrable).
  DeformedResult deformed_complex(const GradedElement& lambda, const GradedElement& omega_bar, int max_degree) const;

  CohomologyReport analyze(const GradedElement& lambda, int max_degree) const;

 private:
  std::size_t dbar_rank(int p, int q) const;
  std::size_t total_rank(int d, const GradedElement& lambda) const;
  std::size_t d1_rank(int p, int q, const GradedElement& lambda) const;

  SchoutenComplex complex_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::size_t> dbar_rank_cache_;
  mutable std::map<std::pair<int, std::string>, std::size_t> total_rank_cache_;
};

}  // namespace hpcoh
