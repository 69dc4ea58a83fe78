#include "voganish/agroup.hpp"

#include <algorithm>
#include <set>

namespace voganish {

namespace {

// Smith normal form of an integer matrix A (k x m): returns D (diagonal
// entries, length min(k,m)) and the unimodular V with A = U D V. Only V is
// needed by the caller.
struct Snf {
  std::vector<long> d;
  std::vector<std::vector<long>> v;  // m x m unimodular
};

Snf smith(std::vector<std::vector<long>> a) {
  // Maintains rel = U * a * V_acc with V_acc tracked so that, at the end,
  // rowspan(rel) = span{ d_i * (row i of V_acc applied to the ambient basis) }.
  int k = static_cast<int>(a.size());
  int m = k ? static_cast<int>(a[0].size()) : 0;
  std::vector<std::vector<long>> v(m, std::vector<long>(m, 0));
  for (int i = 0; i < m; ++i) v[i][i] = 1;

  // Column op a -> a*E is matched by v -> E^{-1} v.
  auto col_swap = [&](int c1, int c2) {
    for (int r = 0; r < k; ++r) std::swap(a[r][c1], a[r][c2]);
    std::swap(v[c1], v[c2]);
  };
  auto col_add = [&](int dst, int src, long f) {  // col dst += f * col src
    for (int r = 0; r < k; ++r) a[r][dst] += f * a[r][src];
    for (int c = 0; c < m; ++c) v[src][c] -= f * v[dst][c];
  };
  auto col_neg = [&](int c) {
    for (int r = 0; r < k; ++r) a[r][c] = -a[r][c];
    for (int cc = 0; cc < m; ++cc) v[c][cc] = -v[c][cc];
  };
  auto row_swap = [&](int r1, int r2) { std::swap(a[r1], a[r2]); };
  auto row_add = [&](int dst, int src, long f) {
    for (int c = 0; c < m; ++c) a[dst][c] += f * a[src][c];
  };

  int lim = std::min(k, m);
  for (int t = 0; t < lim; ++t) {
    bool stable = false;
    while (!stable) {
      // Move a minimal nonzero entry of the remaining block to (t, t).
      int pr = -1, pc = -1;
      for (int r = t; r < k; ++r)
        for (int c = t; c < m; ++c)
          if (a[r][c] != 0 &&
              (pr < 0 || std::abs(a[r][c]) < std::abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) {
        stable = true;
        break;
      }
      row_swap(t, pr);
      col_swap(t, pc);
      stable = true;
      for (int r = t + 1; r < k; ++r)
        if (a[r][t] % a[t][t] != 0 || a[r][t] != 0) {
          long f = a[r][t] / a[t][t];
          row_add(r, t, -f);
          if (a[r][t] != 0) stable = false;
        }
      for (int c = t + 1; c < m; ++c)
        if (a[t][c] != 0) {
          long f = a[t][c] / a[t][t];
          col_add(c, t, -f);
          if (a[t][c] != 0) stable = false;
        }
      if (stable) {
        // Entries below/right of the pivot are zero; enforce divisibility of
        // the remaining block by folding offending entries into column t.
        for (int r = t + 1; r < k && stable; ++r)
          for (int c = t + 1; c < m; ++c)
            if (a[r][c] % a[t][t] != 0) {
              col_add(t, c, 1);
              stable = false;
              break;
            }
      }
    }
    if (t < lim && a[t][t] < 0) col_neg(t);
  }
  Snf out;
  for (int i = 0; i < lim; ++i) out.d.push_back(a[i][i]);
  out.v = std::move(v);
  return out;
}

}  // namespace

ComponentGroupEngine::ComponentGroupEngine(const Geometry& g, const Point& x, const Point* xi)
    : geo_(g), m_(g.variety().torus_rank()) {
  const auto& spec = g.variety().spec();
  const Variety& v = g.variety();

  // Weight vector of every nonzero coordinate of x (and xi): diagonal torus
  // t = (t_0..t_{m-1}) scales chain entry (f, r, c) by t_{(f,r)} / t_{(f+1,c)}
  // and end entry (r, c) by t_{(l-1,r)} * t_{(l-1,c)}; dual factors invert.
  auto add_weights = [&](const Point& p, bool dual) {
    int chain = v.num_factors() - (spec.self_dual() ? 1 : 0);
    for (int f = 0; f < v.num_factors(); ++f) {
      const Mat& mat = p.m[f];
      for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c) {
          if (mat.at(r, c).is_zero()) continue;
          std::vector<long> w(m_, 0);
          if (f < chain) {
            int src = dual ? v.torus_index(f + 1, r) : v.torus_index(f, r);
            int dst = dual ? v.torus_index(f, c) : v.torus_index(f + 1, c);
            w[src] += 1;
            w[dst] -= 1;
          } else {
            int b = spec.blocks() - 1;
            long sgn = dual ? -1 : 1;
            w[v.torus_index(b, r)] += sgn;
            w[v.torus_index(b, c)] += sgn;
          }
          weights_.push_back(std::move(w));
        }
    }
  };
  add_weights(x, false);
  if (xi) add_weights(*xi, true);

  // Gamma: solutions a in (Z/4)^m of weight and constraint congruences, lifted
  // and saturated with 4Z^m. Solve by enumerating (Z/4)^m; m <= 6 in scope.
  if (m_ > 8) throw std::runtime_error("component group: torus rank outside supported catalog");
  std::vector<std::vector<long>> gamma_gens;
  long total = 1;
  for (int k = 0; k < m_; ++k) total *= 4;
  for (long code = 0; code < total; ++code) {
    std::vector<long> a(m_);
    long cur = code;
    for (int k = 0; k < m_; ++k) {
      a[k] = cur % 4;
      cur /= 4;
    }
    bool ok = true;
    for (const auto& w : weights_) {
      long s = 0;
      for (int k = 0; k < m_; ++k) s += w[k] * a[k];
      if (((s % 4) + 4) % 4 != 0) {
        ok = false;
        break;
      }
    }
    for (const auto& c : spec.constraints) {
      if (!ok) break;
      long s = 0;
      for (int b = 0; b < spec.blocks(); ++b)
        for (int j = 0; j < spec.dims[b]; ++j) s += c.exps[b] * a[v.torus_index(b, j)];
      long need = c.order == 0 ? 1 : c.order;
      if (((s * need) % 4 + 4) % 4 != 0) ok = false;
    }
    if (ok) gamma_gens.push_back(a);
  }
  for (int k = 0; k < m_; ++k) {
    std::vector<long> e(m_, 0);
    e[k] = 4;
    gamma_gens.push_back(e);
  }

  // Hermite-style basis of the Gamma lattice via SNF on the generator rows.
  // Use SNF of the generator matrix transposed: columns span the lattice.
  // Simpler: run integer row reduction to a triangular basis.
  auto lattice_basis = [&](std::vector<std::vector<long>> rows) {
    // Column-style HNF by repeated gcd elimination.
    int n = m_;
    std::vector<std::vector<long>> basis;
    for (int col = 0; col < n; ++col) {
      // Find row with minimal nonzero |entry| at col, eliminate others.
      while (true) {
        int best = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
          if (rows[r][col] == 0) continue;
          bool lower_ok = true;
          for (int cc = 0; cc < col; ++cc)
            if (rows[r][cc] != 0) lower_ok = false;
          if (!lower_ok) continue;
          if (best < 0 || std::abs(rows[r][col]) < std::abs(rows[best][col])) best = static_cast<int>(r);
        }
        if (best < 0) break;
        bool changed = false;
        for (size_t r = 0; r < rows.size(); ++r) {
          if (static_cast<int>(r) == best || rows[r][col] == 0) continue;
          bool lower_ok = true;
          for (int cc = 0; cc < col; ++cc)
            if (rows[r][cc] != 0) lower_ok = false;
          if (!lower_ok) continue;
          long f = rows[r][col] / rows[best][col];
          for (int cc = 0; cc < n; ++cc) rows[r][cc] -= f * rows[best][cc];
          if (rows[r][col] != 0) changed = true;
        }
        if (!changed) {
          basis.push_back(rows[best]);
          if (rows[best][col] < 0)
            for (long& x2 : basis.back()) x2 = -x2;
          for (int cc = 0; cc < n; ++cc) rows[best][cc] = 0;
          break;
        }
      }
    }
    return basis;
  };
  auto gamma_basis = lattice_basis(gamma_gens);
  if (static_cast<int>(gamma_basis.size()) != m_)
    throw std::runtime_error("component group: Gamma lattice not full rank");

  // Connected sublattice N: integer null space of weights and constraints,
  // plus 4Z^m, plus rotation patterns.
  std::vector<std::vector<long>> n_gens;
  {
    int rows = static_cast<int>(weights_.size() + spec.constraints.size());
    Mat cond(std::max(rows, 1), m_);
    int rr = 0;
    for (const auto& w : weights_) {
      for (int k = 0; k < m_; ++k) cond.at(rr, k) = QI(w[k]);
      ++rr;
    }
    for (const auto& c : spec.constraints) {
      for (int b = 0; b < spec.blocks(); ++b)
        for (int j = 0; j < spec.dims[b]; ++j) cond.at(rr, v.torus_index(b, j)) = QI(c.exps[b]);
      ++rr;
    }
    for (const auto& vec : cond.null_space()) {
      // Scale to integers.
      mpz_class lcm_den(1);
      for (const auto& q : vec) {
        if (!q.is_rational()) throw std::logic_error("integer nullspace expected");
        mpz_class den = q.re.get_den();
        lcm_den = lcm_den * den / gcd(lcm_den, den);
      }
      std::vector<long> iv(m_);
      for (int k = 0; k < m_; ++k) {
        mpq_class scaled = vec[k].re * mpq_class(lcm_den);
        iv[k] = static_cast<long>(mpz_class(scaled.get_num() / scaled.get_den()).get_si());
      }
      n_gens.push_back(iv);
    }
  }
  for (int k = 0; k < m_; ++k) {
    std::vector<long> e(m_, 0);
    e[k] = 4;
    n_gens.push_back(e);
  }

  // Rotation-type one-parameter certificates for same-block coordinate pairs.
  // Families  g(c,s) = D(c,s) * R_pq(c,s)  with
  //   circular:   R = [[c, s], [-s, c]],  c^2 + s^2 = 1,  unit w = c + i*s
  //   hyperbolic: R = [[c, s], [ s, c]],  c^2 - s^2 = 1,  unit w = c + s
  // and D diagonal with w^{k_t} on the other torus coordinates. When such a
  // family fixes the base point(s) identically, its value at (c, s) = (-1, 0)
  // is the diagonal pattern (2k_t; 2, 2), connected to the identity; circular
  // families also give the coordinate-swap identification via g at (0, 1).
  struct CertifiedRotation {
    int tp, tq;
    bool circular;
    std::vector<long> comp;  // exponent per torus coordinate (0 at tp, tq)
  };
  std::vector<CertifiedRotation> rotations;
  if (spec.constraints.empty()) {
    // Elements of Q(i)[c, s] / (c^2 - (1 + sigma s^2)), sigma = -1 circular,
    // +1 hyperbolic, stored as a(s) + c*b(s).
    struct RPoly {
      std::vector<QI> a, b;
      int sigma = -1;
    };
    auto trim = [](std::vector<QI>& v) {
      while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    auto padd = [&](RPoly x, const RPoly& y) {
      x.a.resize(std::max(x.a.size(), y.a.size()));
      x.b.resize(std::max(x.b.size(), y.b.size()));
      for (size_t k = 0; k < y.a.size(); ++k) x.a[k] += y.a[k];
      for (size_t k = 0; k < y.b.size(); ++k) x.b[k] += y.b[k];
      trim(x.a);
      trim(x.b);
      return x;
    };
    auto smul = [&](const std::vector<QI>& u, const std::vector<QI>& v2) {
      std::vector<QI> r(u.size() + v2.size(), QI());
      for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v2.size(); ++j) r[i + j] += u[i] * v2[j];
      trim(r);
      return r;
    };
    auto sadd = [&](std::vector<QI> u, const std::vector<QI>& v2) {
      u.resize(std::max(u.size(), v2.size()));
      for (size_t k = 0; k < v2.size(); ++k) u[k] += v2[k];
      trim(u);
      return u;
    };
    auto pmul = [&](const RPoly& x, const RPoly& y) {
      // (xa + c xb)(ya + c yb) = xa ya + c^2 xb yb + c(xa yb + xb ya),
      // c^2 = 1 + sigma s^2.
      RPoly r;
      r.sigma = x.sigma;
      std::vector<QI> c2 = {QI(1), QI(), QI(x.sigma)};
      r.a = sadd(smul(x.a, y.a), smul(c2, smul(x.b, y.b)));
      r.b = sadd(smul(x.a, y.b), smul(x.b, y.a));
      return r;
    };
    auto pconst = [&](QI q, int sigma) {
      RPoly r;
      r.sigma = sigma;
      if (!q.is_zero()) r.a = {q};
      return r;
    };
    auto pequal = [&](const RPoly& x, const RPoly& y) { return x.a == y.a && x.b == y.b; };

    using RingMat = std::vector<std::vector<RPoly>>;
    auto ring_id = [&](int n, int sigma) {
      RingMat g(n, std::vector<RPoly>(n, pconst(QI(), sigma)));
      for (int k = 0; k < n; ++k) g[k][k] = pconst(QI(1), sigma);
      return g;
    };
    auto ring_mul = [&](const RingMat& A, const RingMat& B) {
      int n = static_cast<int>(A.size()), mm = static_cast<int>(B[0].size());
      int kk = static_cast<int>(B.size());
      RingMat C(n, std::vector<RPoly>(mm, pconst(QI(), A[0][0].sigma)));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < kk; ++k)
          for (int j = 0; j < mm; ++j) C[i][j] = padd(C[i][j], pmul(A[i][k], B[k][j]));
      return C;
    };
    auto ring_tr = [&](const RingMat& A) {
      RingMat T(A[0].size(), std::vector<RPoly>(A.size(), pconst(QI(), A[0][0].sigma)));
      for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
      return T;
    };
    auto unit_pow = [&](long k, bool circular) {
      // (c + tau s)^k with tau = i (circular) or 1 (hyperbolic); inverse flips
      // the sign of tau.
      int sigma = circular ? -1 : 1;
      QI tau = circular ? QI::i() : QI(1);
      if (k < 0) {
        tau = -tau;
        k = -k;
      }
      RPoly base;
      base.sigma = sigma;
      base.a = {QI(), tau};  // tau * s
      base.b = {QI(1)};      // + c
      RPoly acc = pconst(QI(1), sigma);
      for (long e = 0; e < k; ++e) acc = pmul(acc, base);
      return acc;
    };

    int chain = v.num_factors() - (spec.self_dual() ? 1 : 0);
    std::vector<std::pair<int, int>> coord_block;  // torus coord -> (block, pos)
    for (int b = 0; b < spec.blocks(); ++b)
      for (int j = 0; j < spec.dims[b]; ++j) coord_block.emplace_back(b, j);

    auto try_family = [&](int tp, int tq, bool circular, const std::vector<long>& comp) {
      int sigma = circular ? -1 : 1;
      auto [bb, jp] = coord_block[tp];
      int jq = coord_block[tq].second;
      // Block matrices for g and g^{-1}.
      std::vector<RingMat> G, Ginv;
      for (int b = 0; b < spec.blocks(); ++b) {
        int d = spec.dims[b];
        RingMat g = ring_id(d, sigma), gi = ring_id(d, sigma);
        for (int j = 0; j < d; ++j) {
          int t = v.torus_index(b, j);
          if (t == tp || t == tq) continue;
          g[j][j] = unit_pow(comp[t], circular);
          gi[j][j] = unit_pow(-comp[t], circular);
        }
        if (b == bb) {
          RPoly pc = pconst(QI(), sigma), ps = pc, pns = pc;
          pc.b = {QI(1)};
          ps.a = {QI(), QI(1)};
          pns.a = {QI(), QI(-1)};
          g[jp][jp] = pc;
          g[jq][jq] = pc;
          g[jp][jq] = ps;
          g[jq][jp] = circular ? pns : ps;
          gi[jp][jp] = pc;
          gi[jq][jq] = pc;
          gi[jp][jq] = circular ? pns : pns;
          gi[jq][jp] = circular ? ps : pns;
        }
        G.push_back(std::move(g));
        Ginv.push_back(std::move(gi));
      }
      auto lift = [&](const Mat& mm2) {
        RingMat r(mm2.rows(), std::vector<RPoly>(mm2.cols(), pconst(QI(), sigma)));
        for (int rr2 = 0; rr2 < mm2.rows(); ++rr2)
          for (int cc2 = 0; cc2 < mm2.cols(); ++cc2) r[rr2][cc2] = pconst(mm2.at(rr2, cc2), sigma);
        return r;
      };
      auto fixes_point = [&](const Point& pt, bool dual) {
        for (int f = 0; f < v.num_factors(); ++f) {
          RingMat acted = lift(pt.m[f]);
          if (f < chain) {
            acted = dual ? ring_mul(ring_mul(G[f + 1], acted), Ginv[f])
                         : ring_mul(ring_mul(G[f], acted), Ginv[f + 1]);
          } else {
            int l = spec.blocks() - 1;
            if (!dual)
              acted = ring_mul(ring_mul(G[l], acted), ring_tr(G[l]));
            else
              acted = ring_mul(ring_mul(ring_tr(Ginv[l]), acted), Ginv[l]);
          }
          RingMat want = lift(pt.m[f]);
          for (size_t rr2 = 0; rr2 < acted.size(); ++rr2)
            for (size_t cc2 = 0; cc2 < acted[0].size(); ++cc2)
              if (!pequal(acted[rr2][cc2], want[rr2][cc2])) return false;
        }
        return true;
      };
      return fixes_point(x, false) && (!xi || fixes_point(*xi, true));
    };

    for (int b = 0; b < spec.blocks(); ++b) {
      int d = spec.dims[b];
      for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
          int tp = v.torus_index(b, p), tq = v.torus_index(b, q);
          std::vector<int> others;
          for (int t = 0; t < m_; ++t)
            if (t != tp && t != tq) others.push_back(t);
          for (bool circular : {true, false}) {
            bool found_family = false;
            std::vector<long> kvec(m_, 0);
            std::vector<long> idx(others.size(), 0);
            while (!found_family) {
              for (size_t t = 0; t < others.size(); ++t) kvec[others[t]] = idx[t] - 2;
              if (try_family(tp, tq, circular, kvec)) {
                rotations.push_back({tp, tq, circular, kvec});
                found_family = true;
                break;
              }
              size_t t = 0;
              while (t < idx.size() && ++idx[t] == 5) idx[t++] = 0;
              if (t == idx.size() && !idx.empty()) break;
              if (idx.empty()) break;
            }
            if (found_family) break;  // one family per pair suffices
          }
        }
    }
  }
  for (const auto& rot : rotations) {
    std::vector<long> rpi(m_, 0);
    for (int t = 0; t < m_; ++t) rpi[t] = 2 * rot.comp[t];
    rpi[rot.tp] = 2;
    rpi[rot.tq] = 2;  // value of the family at (c, s) = (-1, 0)
    n_gens.push_back(rpi);
    if (rot.circular) {
      // Conjugation by the family value at (0, 1) swaps the pair coordinates
      // on diagonal patterns: identify a ~ swap(a).
      for (const auto& a : gamma_basis) {
        std::vector<long> diff(m_, 0);
        diff[rot.tp] = a[rot.tp] - a[rot.tq];
        diff[rot.tq] = a[rot.tq] - a[rot.tp];
        if (diff[rot.tp] != 0 || diff[rot.tq] != 0) n_gens.push_back(diff);
      }
    }
  }

  // Express N generators in Gamma coordinates: solve a = coords * G.
  Mat gmat(m_, m_);
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c) gmat.at(r, c) = QI(gamma_basis[r][c]);
  Mat gmat_t = gmat.transpose();
  std::vector<std::vector<long>> rel;  // rows: N gens in Gamma coords
  for (const auto& ng : n_gens) {
    std::vector<QI> b(m_);
    for (int k = 0; k < m_; ++k) b[k] = QI(ng[k]);
    std::vector<QI> sol;
    if (!gmat_t.solve(b, sol))
      throw std::runtime_error("component group: connected generator outside Gamma");
    std::vector<long> row(m_);
    for (int k = 0; k < m_; ++k) {
      if (!sol[k].is_rational() || sol[k].re.get_den() != 1)
        throw std::runtime_error("component group: connected generator outside Gamma lattice");
      row[k] = static_cast<long>(sol[k].re.get_num().get_si());
    }
    rel.push_back(std::move(row));
  }

  Snf snf = smith(rel);
  // New Gamma basis: G' = V * G; relations become d_i * g'_i.
  gprime_.assign(m_, std::vector<long>(m_, 0));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k) gprime_[i][j] += snf.v[i][k] * gamma_basis[k][j];
  dvals_.assign(m_, 0);
  for (int i = 0; i < m_; ++i) dvals_[i] = i < static_cast<int>(snf.d.size()) ? snf.d[i] : 0;
  for (int i = 0; i < m_; ++i) {
    if (dvals_[i] == 0)
      throw std::runtime_error("component group: infinite quotient (capture failed)");
    if (dvals_[i] > 1) {
      internal_orders_.push_back(static_cast<int>(dvals_[i]));
      internal_pos_.push_back(i);
      internal_witnesses_.push_back(gprime_[i]);
    }
  }
  if (size() > 64) throw std::runtime_error("component group: outside supported catalog");

  gprime_inv_num_ = Mat(m_, m_);
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c) gprime_inv_num_.at(r, c) = QI(gprime_[r][c]);
  gprime_inv_num_ = gprime_inv_num_.transpose();
}

bool ComponentGroupEngine::pattern_stabilizes(const std::vector<long>& a) const {
  const auto& spec = geo_.variety().spec();
  const Variety& v = geo_.variety();
  for (const auto& w : weights_) {
    long s = 0;
    for (int k = 0; k < m_; ++k) s += w[k] * a[k];
    if (((s % 4) + 4) % 4 != 0) return false;
  }
  for (const auto& c : spec.constraints) {
    long s = 0;
    for (int b = 0; b < spec.blocks(); ++b)
      for (int j = 0; j < spec.dims[b]; ++j) s += c.exps[b] * a[v.torus_index(b, j)];
    if (((s * c.order) % 4 + 4) % 4 != 0) return false;
  }
  return true;
}

std::vector<int> ComponentGroupEngine::reduce(const std::vector<long>& a) const {
  std::vector<QI> b(m_);
  for (int k = 0; k < m_; ++k) b[k] = QI(a[k]);
  std::vector<QI> sol;
  if (!gprime_inv_num_.solve(b, sol))
    throw std::runtime_error("component group: pattern not in Gamma");
  std::vector<int> coords;
  for (size_t t = 0; t < internal_pos_.size(); ++t) {
    const QI& q = sol[internal_pos_[t]];
    if (!q.is_rational() || q.re.get_den() != 1)
      throw std::runtime_error("component group: pattern not in Gamma lattice");
    long c = q.re.get_num().get_si();
    long d = dvals_[internal_pos_[t]];
    coords.push_back(static_cast<int>(((c % d) + d) % d));
  }
  // Non-retained coordinates must be integral too (checked above via solve).
  return coords;
}

GroupElement ComponentGroupEngine::class_of_pattern(const std::vector<long>& a) const {
  if (!pattern_stabilizes(a))
    throw std::runtime_error("component group: element does not stabilize the base point");
  return reduce(a);
}

FiniteAbelianGroup ComponentGroupEngine::presented_by(
    const std::vector<std::vector<long>>& patterns, const std::vector<int>& orders,
    const std::vector<std::string>& names) const {
  if (patterns.size() != orders.size() || names.size() != orders.size())
    throw std::runtime_error("component group presentation: shape mismatch");
  long declared = 1;
  for (int o : orders) declared *= o;
  if (declared != size())
    throw std::runtime_error("component group presentation: order " + std::to_string(declared) +
                             " != computed " + std::to_string(size()));
  // Each pattern stabilizes, has the declared order, and together they
  // generate: enumerate the subgroup generated by the classes.
  std::vector<GroupElement> cls;
  for (size_t k = 0; k < patterns.size(); ++k) {
    GroupElement e = class_of_pattern(patterns[k]);
    // order check
    int ord = 1;
    GroupElement acc(e.size(), 0);
    do {
      for (size_t t = 0; t < e.size(); ++t) acc[t] = (acc[t] + e[t]) % internal_orders_[t];
      if (std::all_of(acc.begin(), acc.end(), [](int x) { return x == 0; })) break;
      ++ord;
    } while (ord <= 8);
    if (ord != orders[k])
      throw std::runtime_error("component group presentation: generator order mismatch for " +
                               names[k]);
    cls.push_back(e);
  }
  std::set<GroupElement> span;
  std::vector<int> idx(cls.size(), 0);
  while (true) {
    GroupElement e(internal_orders_.size(), 0);
    for (size_t k = 0; k < cls.size(); ++k)
      for (size_t t = 0; t < e.size(); ++t)
        e[t] = (e[t] + idx[k] * cls[k][t]) % internal_orders_[t];
    span.insert(e);
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == orders[k]) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  if (static_cast<long>(span.size()) != size())
    throw std::runtime_error("component group presentation: generators do not present the group");
  FiniteAbelianGroup g;
  g.orders = orders;
  g.generator_names = names;
  g.witnesses = patterns;
  return g;
}

GroupElement ComponentGroupEngine::element_in_presentation(const FiniteAbelianGroup& pres,
                                                           const std::vector<long>& pattern) const {
  GroupElement target = class_of_pattern(pattern);
  // Brute-force discrete log in the (tiny) presented group.
  std::vector<int> idx(pres.orders.size(), 0);
  std::vector<GroupElement> cls;
  for (const auto& p : pres.witnesses) cls.push_back(class_of_pattern(p));
  while (true) {
    GroupElement e(internal_orders_.size(), 0);
    for (size_t k = 0; k < cls.size(); ++k)
      for (size_t t = 0; t < e.size(); ++t)
        e[t] = (e[t] + idx[k] * cls[k][t]) % internal_orders_[t];
    if (e == target) return idx;
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == pres.orders[k]) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  throw std::runtime_error("component group: element not reachable in presentation");
}

std::vector<Character> all_characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  std::vector<int> idx(g.orders.size(), 0);
  while (true) {
    Character c;
    c.exps = idx;
    out.push_back(c);
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == g.orders[k]) idx[k++] = 0;
    if (k == idx.size()) break;
    if (idx.empty()) break;
  }
  if (g.orders.empty()) out.resize(1);
  return out;
}

}  // namespace voganish
