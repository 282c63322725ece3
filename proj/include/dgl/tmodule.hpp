#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgl/charpoly.hpp"
#include "dgl/drinfeld.hpp"
#include "dgl/gfrac.hpp"

namespace dgl {

enum class TensorKind { Tensor2, Sym2, Alt2 };

inline const char* tensor_kind_name(TensorKind k) {
  switch (k) {
    case TensorKind::Tensor2: return "tensor2";
    case TensorKind::Sym2: return "sym2";
    case TensorKind::Alt2: return "alt2";
  }
  return "?";
}

// Matrix operations M -> M^(x)2, Sym^2(M), Alt^2(M) in the paper's
// lexicographic bases.  M represents a module homomorphism via f.v = M v,
// which makes T(M1 M2) = T(M1) T(M2).
template <class T>
Mat<T> matrix_T(const Mat<T>& M, TensorKind kind) {
  const int r = M.rows();
  if (M.cols() != r) throw internal_error("matrix_T needs a square matrix");
  const T z = zero_like(M(0, 0));
  switch (kind) {
    case TensorKind::Tensor2:
      return kronecker(M, M);
    case TensorKind::Sym2: {
      std::vector<std::pair<int, int>> idx;
      for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) idx.push_back({i, j});
      Mat<T> S(static_cast<int>(idx.size()), static_cast<int>(idx.size()), z);
      for (size_t a = 0; a < idx.size(); ++a) {
        auto [i, j] = idx[a];
        for (size_t b = 0; b < idx.size(); ++b) {
          auto [k, l] = idx[b];
          if (k == l)
            S(static_cast<int>(a), static_cast<int>(b)) = M(i, k) * M(j, k);
          else
            S(static_cast<int>(a), static_cast<int>(b)) = M(i, k) * M(j, l) + M(i, l) * M(j, k);
        }
      }
      return S;
    }
    case TensorKind::Alt2: {
      std::vector<std::pair<int, int>> idx;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) idx.push_back({i, j});
      Mat<T> S(static_cast<int>(idx.size()), static_cast<int>(idx.size()), z);
      for (size_t a = 0; a < idx.size(); ++a) {
        auto [i, j] = idx[a];
        for (size_t b = 0; b < idx.size(); ++b) {
          auto [k, l] = idx[b];
          S(static_cast<int>(a), static_cast<int>(b)) = M(i, k) * M(j, l) - M(i, l) * M(j, k);
        }
      }
      return S;
    }
  }
  throw internal_error("unreachable");
}

struct Provenance {
  enum Tag { Plain, Tensor, Sym2, Alt2 } tag = Plain;
  std::optional<DrinfeldModule> phi, psi;
  bool operands_swapped = false;
};

// Anderson t-module over A given by E_t, with dE_t - theta*I nilpotent.
class TModule {
 public:
  TModule(TwistedPoly<PolyA> Et, Provenance prov = {}) : Et_(std::move(Et)), prov_(std::move(prov)) {
    check_nilpotent();
  }

  const FqCtx& ctx() const { return Et_.sample().ctx(); }
  int dim() const { return Et_.ell(); }
  const TwistedPoly<PolyA>& action_t() const { return Et_; }
  const Provenance& provenance() const { return prov_; }

  Mat<PolyA> dE() const { return Et_.constant_term(); }
  // N = dE_t - theta * I
  Mat<PolyA> nilpotent_part() const {
    Mat<PolyA> N = dE();
    for (int i = 0; i < dim(); ++i) N(i, i) -= PolyA::theta(ctx());
    return N;
  }
  int nilpotency_index() const {
    Mat<PolyA> N = nilpotent_part();
    Mat<PolyA> P = Mat<PolyA>::identity(dim(), PolyA::zero(ctx()));
    for (int k = 1; k <= dim(); ++k) {
      P = P * N;
      if (P.is_zero_mat()) return k;
    }
    throw internal_error("dE_t - theta*I is not nilpotent");
  }

  // E_a for a in F_q[t]
  TwistedPoly<PolyA> action(const PolyA& a_in_t) const {
    TwistedPoly<PolyA> r = TwistedPoly<PolyA>::zero(Side::Tau, dim(), PolyA::zero(ctx()));
    TwistedPoly<PolyA> power =
        TwistedPoly<PolyA>::constant(Side::Tau, Mat<PolyA>::identity(dim(), PolyA::zero(ctx())));
    for (int i = 0; i <= a_in_t.deg(); ++i) {
      if (a_in_t.coeff_packed(i) != 0) {
        Fq s(ctx(), a_in_t.coeff_packed(i));
        TwistedPoly<PolyA> term = power;
        for (int k = 0; k <= term.deg(); ++k) term.set_coeff(k, term.coeff(k) * PolyA::constant(ctx(), s.v));
        r += term;
      }
      if (i < a_in_t.deg()) power *= Et_;
    }
    return r;
  }

  TwistedPoly<FfElem> reduce(const std::shared_ptr<const ResidueCtx>& R) const {
    FfElem z = FfElem::raw(R, PolyA::zero(ctx()));
    TwistedPoly<FfElem> p(Side::Tau, dim(), z);
    for (int k = 0; k <= Et_.deg(); ++k) {
      Mat<PolyA> c = Et_.coeff(k);
      Mat<FfElem> m(dim(), dim(), z);
      for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) m(i, j) = FfElem(R, c(i, j));
      p.set_coeff(k, m);
    }
    return p;
  }

 private:
  TwistedPoly<PolyA> Et_;
  Provenance prov_;

  void check_nilpotent() { nilpotency_index(); }
};

// Tensor product model of Def. "phi tensor psi" with blocks X1..X4; the
// convention requires rank(phi) <= rank(psi), so larger-rank first operands
// are swapped (the two orders give isomorphic t-modules).
inline TModule build_tensor(DrinfeldModule phi, DrinfeldModule psi) {
  if (!phi.everywhere_good() || !psi.everywhere_good())
    throw guard_error("tensor model requires everywhere good reduction");
  bool swapped = false;
  if (phi.rank() > psi.rank()) {
    std::swap(phi, psi);
    swapped = true;
  }
  const FqCtx& C = phi.ctx();
  const int r = phi.rank(), l = psi.rank(), n = r + l;
  PolyA z = PolyA::zero(C);
  TwistedPoly<PolyA> Et(Side::Tau, n, z);
  auto add = [&](int i, int j, int taupow, const PolyA& c) {
    Mat<PolyA> m = Et.coeff(taupow);
    m(i, j) += c;
    Et.set_coeff(taupow, std::move(m));
  };
  PolyA theta = PolyA::theta(C);
  // X1 (l x l): theta on the diagonal, kappa_{i-j} tau^{i-j} below
  for (int i = 0; i < l; ++i) {
    add(i, i, 0, theta);
    for (int j = 0; j < i; ++j)
      if (i - j <= r) add(i, j, i - j, phi.kappa(i - j));
  }
  // X2 (l x r): kappa_{i+j+1} tau^i
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j)
      if (i + j + 1 <= r) add(i, l + j, i, phi.kappa(i + j + 1));
  // X3 (r x l): eta_{i+j+1} tau^{i+1}
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < l; ++j)
      if (i + j + 1 <= l) add(l + i, j, i + 1, psi.kappa(i + j + 1));
  // X4 (r x r): theta on the diagonal, eta_{i-j} tau^{i-j} below
  for (int i = 0; i < r; ++i) {
    add(l + i, l + i, 0, theta);
    for (int j = 0; j < i; ++j)
      if (i - j <= l) add(l + i, l + j, i - j, psi.kappa(i - j));
  }
  Provenance prov;
  prov.tag = Provenance::Tensor;
  prov.phi = phi;
  prov.psi = psi;
  prov.operands_swapped = swapped;
  return TModule(std::move(Et), std::move(prov));
}

inline void require_odd_characteristic(const FqCtx& C, const char* what) {
  if (C.p() == 2) throw guard_error(std::string(what) + " requires characteristic != 2");
}

inline TModule build_sym2(const DrinfeldModule& phi) {
  require_odd_characteristic(phi.ctx(), "Sym^2");
  if (!phi.everywhere_good()) throw guard_error("Sym^2 model requires everywhere good reduction");
  const FqCtx& C = phi.ctx();
  const int r = phi.rank(), n = r + 1;
  TwistedPoly<PolyA> Et(Side::Tau, n, PolyA::zero(C));
  auto add = [&](int i, int j, int taupow, const PolyA& c) {
    Mat<PolyA> m = Et.coeff(taupow);
    m(i, j) += c;
    Et.set_coeff(taupow, std::move(m));
  };
  PolyA theta = PolyA::theta(C);
  for (int i = 0; i < n; ++i) {
    add(i, i, 0, theta);
    for (int j = 0; j < i; ++j)
      if (i - j <= r) add(i, j, i - j, phi.kappa(i - j));
  }
  // second block: row 0 holds constants kappa_j, lower rows kappa_{i+j} tau^i
  for (int j = 1; j < n; ++j) add(0, j, 0, phi.kappa(j));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i + j <= r) add(i, j, i, phi.kappa(i + j));
  Provenance prov;
  prov.tag = Provenance::Sym2;
  prov.phi = phi;
  return TModule(std::move(Et), std::move(prov));
}

inline TModule build_alt2(const DrinfeldModule& phi) {
  require_odd_characteristic(phi.ctx(), "Alt^2");
  if (phi.rank() < 2) throw guard_error("Alt^2 requires rank >= 2");
  if (!phi.everywhere_good()) throw guard_error("Alt^2 model requires everywhere good reduction");
  const FqCtx& C = phi.ctx();
  const int r = phi.rank(), n = r - 1;
  TwistedPoly<PolyA> Et(Side::Tau, n, PolyA::zero(C));
  auto add = [&](int i, int j, int taupow, const PolyA& c) {
    Mat<PolyA> m = Et.coeff(taupow);
    m(i, j) += c;
    Et.set_coeff(taupow, std::move(m));
  };
  PolyA theta = PolyA::theta(C);
  for (int i = 0; i < n; ++i) {
    add(i, i, 0, theta);
    for (int j = 0; j < i; ++j) add(i, j, i - j, phi.kappa(i - j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j + 2 <= r) add(i, j, i + 1, -phi.kappa(i + j + 2));
  Provenance prov;
  prov.tag = Provenance::Alt2;
  prov.phi = phi;
  return TModule(std::move(Et), std::move(prov));
}

// A-order of the reduction: the t-action of E mod f on F_f^l is an
// F_q-linear map of dimension d*l; its characteristic polynomial evaluated
// at theta is the order [E(F_f)]_A.  Brute-force side of the order
// identities.
inline PolyA module_order_oracle(const TModule& E, const PolyA& f) {
  const FqCtx& C = E.ctx();
  auto R = std::make_shared<const ResidueCtx>(f.make_monic());
  const int d = R->d, l = E.dim(), n = d * l;
  TwistedPoly<FfElem> Ebar = E.reduce(R);
  Mat<Fq> M(n, n, Fq(C, 0));
  std::vector<FfElem> x(l, FfElem::raw(R, PolyA::zero(C)));
  for (int comp = 0; comp < l; ++comp) {
    for (int pw = 0; pw < d; ++pw) {
      for (auto& e : x) e = FfElem::raw(R, PolyA::zero(C));
      x[comp] = FfElem::raw(R, PolyA::monomial(C, pw, 1));
      std::vector<FfElem> y = Ebar.evaluate(x);
      for (int c2 = 0; c2 < l; ++c2)
        for (int p2 = 0; p2 < d; ++p2) M(c2 * d + p2, comp * d + pw) = y[c2].v.coeff(p2);
    }
  }
  PolyT<Fq> chi = charpoly_division_free(M);
  PolyA out(C);
  for (int i = 0; i <= chi.deg(); ++i) out += PolyA::monomial(C, i, chi.coeff(i).v);
  return out;
}

struct PurityReport {
  bool almost_strictly_pure = false;
  TwistedPoly<PolyA> Et2;
};

// "Almost strictly pure": the top tau-coefficient of E_{t^2} is invertible.
inline PurityReport check_almost_strictly_pure(const TModule& E) {
  PurityReport rep{false, E.action_t() * E.action_t()};
  if (rep.Et2.deg() < 0) return rep;
  Mat<PolyA> top = rep.Et2.coeff(rep.Et2.deg());
  PolyA det = det_division_free(top);
  rep.almost_strictly_pure = !det.is_zero() && det.deg() == 0;
  return rep;
}

// Exponential and logarithm coefficient matrices of a t-module, solved
// degree by degree from the functional equations
//   Exp_E . dE_t = E_t . Exp_E     and     dE_t . Log_E = Log_E . E_t.
// Each degree is a Sylvester-type equation whose diagonal part is
// multiplication by theta - theta^(q^n); it is solved by a finite Neumann
// iteration in the nilpotent parts.
class ExpLogCoeffs {
 public:
  ExpLogCoeffs(const TModule& E, int n_max) : C_(&E.ctx()), ell_(E.dim()) {
    const FqCtx& C = *C_;
    GFrac z = GFrac::zero(C);
    Mat<GFrac> I = Mat<GFrac>::identity(ell_, z);
    Mat<PolyA> N = E.nilpotent_part();
    Mat<GFrac> Ng = to_gfrac(N);
    int w = E.action_t().deg();
    std::vector<Mat<GFrac>> Ecoef;
    for (int j = 0; j <= w; ++j) Ecoef.push_back(to_gfrac(E.action_t().coeff(j)));

    B_.push_back(I);
    Cc_.push_back(I);
    for (int n = 1; n <= n_max; ++n) {
      // exp: B_n (theta^(q^n) - theta) + B_n N^(n) - N B_n = RHS
      Mat<GFrac> rhs = Mat<GFrac>::zero(ell_, ell_, z);
      for (int j = 1; j <= std::min(w, n); ++j) rhs += Ecoef[j] * twist(B_[n - j], j);
      Mat<GFrac> Ntw = twist(Ng, n);
      B_.push_back(solve_sylvester(rhs, Ng, Ntw, n, /*exp_side=*/true));
      // log: C_n (theta - theta^(q^n)) + N C_n - C_n N^(n) = RHS'
      Mat<GFrac> rhs2 = Mat<GFrac>::zero(ell_, ell_, z);
      for (int j = 1; j <= std::min(w, n); ++j) rhs2 += Cc_[n - j] * twist(Ecoef[j], n - j);
      Cc_.push_back(solve_sylvester(rhs2, Ng, Ntw, n, /*exp_side=*/false));
    }
  }

  int order() const { return static_cast<int>(B_.size()) - 1; }
  const Mat<GFrac>& exp_coeff(int n) const { return B_[n]; }
  const Mat<GFrac>& log_coeff(int n) const { return Cc_[n]; }

  Mat<RatK> exp_coeff_ratk(int n) const { return B_[n].map([](const GFrac& x) { return x.to_ratk(); }); }
  Mat<RatK> log_coeff_ratk(int n) const { return Cc_[n].map([](const GFrac& x) { return x.to_ratk(); }); }

  // sum_{i+j=n} C_i B_j^(i) should vanish for n >= 1 (Log composed with Exp)
  bool composition_is_identity() const {
    for (int n = 1; n <= order(); ++n) {
      Mat<GFrac> acc = Mat<GFrac>::zero(ell_, ell_, GFrac::zero(*C_));
      for (int i = 0; i <= n; ++i) acc += Cc_[i] * twist(B_[n - i], i);
      if (!acc.is_zero_mat()) return false;
    }
    return true;
  }

 private:
  const FqCtx* C_;
  int ell_;
  std::vector<Mat<GFrac>> B_, Cc_;

  Mat<GFrac> to_gfrac(const Mat<PolyA>& m) const {
    return m.map([](const PolyA& x) { return GFrac(x); });
  }

  // solve X*c + X*N2 - N1*X = rhs (exp side, c = theta^(q^n) - theta = -g_n)
  // or    X*c + N1*X - X*N2 = rhs (log side, c = theta - theta^(q^n) = g_n)
  Mat<GFrac> solve_sylvester(const Mat<GFrac>& rhs, const Mat<GFrac>& N1, const Mat<GFrac>& N2, int n,
                             bool exp_side) const {
    GFrac z = GFrac::zero(*C_);
    Mat<GFrac> X = Mat<GFrac>::zero(ell_, ell_, z);
    auto div_gn = [&](Mat<GFrac> m, bool negate) {
      return m.map([&](const GFrac& x) {
        GFrac y = x.div_g(n);
        if (negate) y = -y;
        return y;
      });
    };
    for (int iter = 0; iter <= 2 * ell_ + 2; ++iter) {
      Mat<GFrac> next = exp_side ? div_gn(rhs - X * N2 + N1 * X, /*negate=*/true)
                                 : div_gn(rhs - N1 * X + X * N2, /*negate=*/false);
      if (next == X) return X;
      X = std::move(next);
    }
    // one extra pass to confirm the fixpoint
    Mat<GFrac> check = exp_side ? div_gn(rhs - X * N2 + N1 * X, true) : div_gn(rhs - N1 * X + X * N2, false);
    if (check == X) return X;
    throw internal_error("Sylvester step failed to converge (nilpotency violated?)");
  }
};

}  // namespace dgl
