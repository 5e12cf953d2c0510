/*
 * Copyright 2026 The braidrep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BRAIDREP_REPS_HPP
#define BRAIDREP_REPS_HPP

#include "braidrep/linalg.hpp"
#include "braidrep/report.hpp"
#include "braidrep/representation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidrep {

// ---------------------------------------------------------------- Burau

/// sigma_i -> I_{i-1} + [[1-t, t], [1, 0]] + I_{n-i-1}.
Representation burau_unreduced(int n);

/// Standard: the usual reduced Burau blocks, -t on the diagonal and -1 / -t
/// off it. Conjugated: the equivalent form with [[1,0,0],[1,-t,t],[0,0,1]]
/// blocks, which is the one the symmetric-square construction starts from.
enum class BurauForm { Standard, Conjugated };
Representation burau_reduced(int n, BurauForm form = BurauForm::Conjugated);

// ---------------------------------------------------- Lawrence-Krammer

/// New: parameters (t, q) with sigma_i F_{i,i+1} = q t^2 F_{i,i+1}.
/// Bigelow: parameters (q, t), sigma_i F_{i,i+1} = -t q^2 F_{i,i+1}.
/// Substituting t -> -q, q -> t in the Bigelow images gives the new ones.
enum class LkNotation { New, Bigelow };

/// Basis pairs (j, k), 1 <= j < k <= n, ordered by k then j:
/// F12, F13, F23, F14, F24, F34, ...
std::vector<std::pair<int, int>> lk_basis(int n);
Representation lk(int n, LkNotation notation = LkNotation::New);

// --------------------------------------------- quantized symmetric square

/// Replaces every entry +-2 by +-(1 + q).
PolyMatrix quantize_sym2(const PolyMatrix& s2);
/// Identity on S^2 of an m-dim space except e_kk -> q e_kk (k is 1-based).
PolyMatrix sym2_scaling(std::size_t m, std::size_t k);
/// Quantized S^2 of the conjugated reduced Burau, in the symmetric basis e.
/// Requires n >= 3.
Representation sym2_quantized(int n);

struct ChangeOfBasis {
    PolyMatrix c;
    PolyMatrix c_inv;
};
/// C and C^{-1} from the explicit column rules: C^{-1} sends e_ij to
/// w_ij = sum_{i<=k<=r<=j} e_kr; C expands e_ij in w.
ChangeOfBasis change_of_basis(int n);
/// The same pair assembled from the block upper triangular description.
ChangeOfBasis change_of_basis_blocks(int n);

/// C sym2_quantized(n)(s_r) C^{-1} == lk(n)(s_r) for every r.
CheckReport verify_lk_equivalence(int n);

// ----------------------------------------------------------- q-Pascal

/// Entry (k, m) is the Gaussian binomial C_{n-k}^{n-m} in the variable qv
/// (a unit, q by default; pass 1 for the plain Pascal matrix).
PolyMatrix qpascal_sigma1(int n, const LaurentPoly& qv = LaurentPoly::q());
/// (sigma1(1/qv, n)^{-1})^sharp via the closed form
/// (-1)^{k+m} qv^{-(k-m)(k-m-1)/2} C_k^m(1/qv) for m <= k.
PolyMatrix qpascal_sigma2(int n, const LaurentPoly& qv = LaurentPoly::q());
/// diag(qv^{r(r-1)/2}), r = 0..n.
PolyMatrix qpascal_d(int n, const LaurentPoly& qv = LaurentPoly::q());

struct LambdaSpec {
    std::vector<LaurentPoly> entries;

    /// Comma separated unit literals, e.g. "t^2,-t,1".
    static LambdaSpec parse(std::string_view text);
    static LambdaSpec identity(int n);
    /// ((-t)^n, (-t)^{n-1}, ..., 1).
    static LambdaSpec burau(int n);

    int n() const noexcept { return static_cast<int>(entries.size()) - 1; }
    /// Empty when valid, otherwise the reason.
    std::string violation() const;
    /// Throws DomainError on violation().
    void validate() const;
    PolyMatrix matrix() const;
};

/// sigma1 -> sigma1(q,n) D^sharp Lambda, sigma2 -> Lambda^sharp D sigma2(q,n).
Representation qpascal_rep(const LambdaSpec& lambda, const LaurentPoly& qv = LaurentPoly::q());
/// As qpascal_rep but skips the lambda_r lambda_{n-r} check. For negative controls.
Representation qpascal_rep_unchecked(const LambdaSpec& lambda,
                                     const LaurentPoly& qv = LaurentPoly::q());
/// The sharp-conjugated family: sigma1 -> (sigma2^Lambda)^sharp,
/// sigma2 -> (sigma1^Lambda)^sharp. For Lambda = (t^2, -t, 1) this is
/// sym2_quantized(3).
Representation qpascal_t_form(const LambdaSpec& lambda, const LaurentPoly& qv = LaurentPoly::q());

// ------------------------------------------------------- Lie algebras

/// Images of the Chevalley data of gl_n in some module, weight basis.
struct LieData {
    std::vector<PolyMatrix> e_diag;  // E_11 .. E_nn, integer diagonal
    std::vector<PolyMatrix> x;       // X_1 .. X_{n-1}, nilpotent
    std::vector<PolyMatrix> y;       // Y_1 .. Y_{n-1}, nilpotent
};

struct Sl2Module {
    PolyMatrix x, y, h;
};
/// Highest weight m module: X superdiagonal m, m-1, .., 1; Y subdiagonal
/// 1, 2, .., m; H = diag(m, m-2, .., -m).
Sl2Module sl2_module(int m);

/// Natural module of gl_n.
LieData natural_gl(int n);
/// gl_2 acting on S^m(C^2), built with sym_power_derivation.
LieData sl2_symmetric_power(int m);

/// sigma_1 -> exp(s E_11) exp(-X_1), sigma_k -> exp(Y_{k-1}) exp(s E_kk) exp(-X_k),
/// sigma_{n} -> exp(Y_{n-1}) exp(s E_nn), with exp(s E) = diag((-t)^d).
/// Gives a representation of B_{n+1}.
Representation braid_from_lie_rep(const LieData& data);

// ------------------------------------------------------- verifications

/// Characteristic polynomials of lk(n)(s1) and S^2(rho_n(s1)) against
/// their closed forms.
CheckReport verify_spectrum(int n);

/// Bigelow images under t -> -q, q -> t equal the new images.
CheckReport verify_bigelow_bridge(int n);

/// J_n: e_k -> e_{k+1}, e_n -> e_1 on an n-dim space.
PolyMatrix cyclic_shift(std::size_t n);
/// x -> x + E_nn.
PolyMatrix embed_last(const PolyMatrix& x);
/// J_n i_n(rho_n(s_k)) J_n^{-1} == rho_{n+1}(s_{k+1}) for 2 <= k <= n-1
/// (conjugated reduced Burau), plus the k = 1 failure as a control.
CheckReport verify_stability(int n);

/// wedge^2 rho_4(s_k) == -t S_3 rho^{std}_4(s_k)|_{t -> 1/t} S_3 for k = 1..3,
/// and the differing spectra of wedge^2 rho_4(s_1) and rho_4(s_1).
CheckReport verify_ext_square_identity();
/// S_3, the antidiagonal 3x3 permutation.
PolyMatrix antidiagonal(std::size_t n);

/// S^m([[1,1],[0,1]]) == sigma1(1, m), exp of the sl2 module generators
/// against sigma1(1, m) and sigma2(1, m), for m = 1..max_dim.
CheckReport verify_humphry(int max_dim);

} // namespace braidrep

#endif
