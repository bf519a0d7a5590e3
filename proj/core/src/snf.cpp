#include "tilek/snf.hpp"

#include <utility>

#include "tilek/error.hpp"

namespace tilek {

namespace {

// dst -= q * src over the given column range of two rows.
void row_submul(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
  for (std::size_t c = from; c < a.cols(); ++c) {
    if (sgn(a(src, c)) == 0) continue;
    mpz_submul(a(dst, c).get_mpz_t(), q.get_mpz_t(), a(src, c).get_mpz_t());
  }
}

void col_submul(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
  for (std::size_t r = from; r < a.rows(); ++r) {
    if (sgn(a(r, src)) == 0) continue;
    mpz_submul(a(r, dst).get_mpz_t(), q.get_mpz_t(), a(r, src).get_mpz_t());
  }
}

class SnfWorker {
 public:
  SnfWorker(const IntMatrix& m, bool keep) : a_(m), keep_(keep) {
    if (keep_) {
      left_ = IntMatrix::identity(m.rows());
      right_ = IntMatrix::identity(m.cols());
    }
  }

  SnfResult run() {
    SnfResult out;
    const std::size_t lim = std::min(a_.rows(), a_.cols());
    for (std::size_t k = 0; k < lim; ++k) {
      if (!settle(k)) break;
      out.diagonal.push_back(a_(k, k));
    }
    out.rank = out.diagonal.size();
    if (keep_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
    }
    return out;
  }

 private:
  bool find_pivot(std::size_t k, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    for (std::size_t r = k; r < a_.rows(); ++r)
      for (std::size_t c = k; c < a_.cols(); ++c) {
        const BigInt& v = a_(r, c);
        if (sgn(v) == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), a_(pr, pc).get_mpz_t()) < 0) {
          pr = r;
          pc = c;
          found = true;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) return true;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (keep_) left_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (keep_) right_.swap_cols(a, b);
  }
  void sub_row(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
    row_submul(a_, dst, src, q, from);
    if (keep_) row_submul(left_, dst, src, q, 0);
  }
  void sub_col(std::size_t dst, std::size_t src, const BigInt& q, std::size_t from) {
    col_submul(a_, dst, src, q, from);
    if (keep_) col_submul(right_, dst, src, q, 0);
  }

  // Brings a divisor of every remaining entry to (k, k) with zeros elsewhere in
  // row and column k. Returns false when the remaining block is zero.
  bool settle(std::size_t k) {
    BigInt q;
    for (;;) {
      std::size_t pr = 0;
      std::size_t pc = 0;
      if (!find_pivot(k, pr, pc)) return false;
      swap_rows(k, pr);
      swap_cols(k, pc);

      bool clean = true;
      for (std::size_t r = k + 1; r < a_.rows(); ++r) {
        if (sgn(a_(r, k)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(r, k).get_mpz_t(), a_(k, k).get_mpz_t());
        if (sgn(q) != 0) sub_row(r, k, q, k);
        if (sgn(a_(r, k)) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < a_.cols(); ++c) {
        if (sgn(a_(k, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(k, c).get_mpz_t(), a_(k, k).get_mpz_t());
        if (sgn(q) != 0) sub_col(c, k, q, k);
        if (sgn(a_(k, c)) != 0) clean = false;
      }
      if (!clean) continue;

      // Row k is now zero beyond the pivot, so adding row r to it only fills
      // entries that the next pass reduces.
      std::size_t bad = a_.rows();
      for (std::size_t r = k + 1; r < a_.rows() && bad == a_.rows(); ++r)
        for (std::size_t c = k + 1; c < a_.cols(); ++c)
          if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(k, k).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad != a_.rows()) {
        sub_row(k, bad, BigInt(-1), k);
        continue;
      }
      if (sgn(a_(k, k)) < 0) {
        for (std::size_t c = k; c < a_.cols(); ++c) a_(k, c) = -a_(k, c);
        if (keep_)
          for (std::size_t c = 0; c < left_.cols(); ++c) left_(k, c) = -left_(k, c);
      }
      return true;
    }
  }

  IntMatrix a_;
  bool keep_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SnfResult snf(const IntMatrix& m, bool keep_transforms) { return SnfWorker(m, keep_transforms).run(); }

FgAbelianGroup cokernel(const IntMatrix& m) {
  SnfResult s = snf(m);
  return FgAbelianGroup::from_orders(std::move(s.diagonal), m.rows() - s.rank);
}

std::string to_string(const ElementOrder& o) { return o.is_finite() ? o.value->get_str() : "infinite"; }

ElementOrder element_order_in_cokernel(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.rows()) throw DimensionError("element_order_in_cokernel: vector length differs from row count");
  SnfResult s = snf(m, true);
  // L v expresses v in the basis where the relations are d_i e_i.
  const IntVector w = *s.left * v;
  BigInt order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) == 0) continue;
    if (i >= s.rank) return ElementOrder::infinite();
    const BigInt& d = s.diagonal[i];
    order = lcm(order, d / gcd(d, w[i]));
  }
  return ElementOrder::finite(order);
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  // Row-style HNF of the transpose: each row is a generator of the lattice.
  IntMatrix g = m.transpose();
  const std::size_t n = g.rows();
  const std::size_t dim = g.cols();
  std::size_t p = 0;
  BigInt q;
  for (std::size_t c = 0; c < dim && p < n; ++c) {
    // Euclid down column c until one generator at or below p carries it.
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = p; r < n; ++r)
        if (sgn(g(r, c)) != 0 && (best == n || mpz_cmpabs(g(r, c).get_mpz_t(), g(best, c).get_mpz_t()) < 0)) best = r;
      if (best == n) break;
      g.swap_rows(p, best);
      bool done = true;
      for (std::size_t r = p + 1; r < n; ++r) {
        if (sgn(g(r, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), g(r, c).get_mpz_t(), g(p, c).get_mpz_t());
        row_submul(g, r, p, q, c);
        if (sgn(g(r, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (p >= n || sgn(g(p, c)) == 0) continue;
    if (sgn(g(p, c)) < 0)
      for (std::size_t j = c; j < dim; ++j) g(p, j) = -g(p, j);
    for (std::size_t r = 0; r < p; ++r) {
      mpz_fdiv_q(q.get_mpz_t(), g(r, c).get_mpz_t(), g(p, c).get_mpz_t());
      if (sgn(q) != 0) row_submul(g, r, p, q, c);
    }
    ++p;
  }
  IntMatrix h(dim, p);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < dim; ++c) h(c, r) = g(r, c);
  return h;
}

bool in_column_lattice(const IntMatrix& h, const IntVector& v) {
  if (v.size() != h.rows()) throw DimensionError("in_column_lattice: vector length differs from row count");
  IntVector w = v;
  std::size_t row = 0;
  BigInt q;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    while (row < h.rows() && sgn(h(row, c)) == 0) {
      if (sgn(w[row]) != 0) return false;
      ++row;
    }
    if (row == h.rows()) break;
    if (!mpz_divisible_p(w[row].get_mpz_t(), h(row, c).get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), w[row].get_mpz_t(), h(row, c).get_mpz_t());
    for (std::size_t r = row; r < h.rows(); ++r) w[r] -= q * h(r, c);
    ++row;
  }
  for (std::size_t r = row; r < w.size(); ++r)
    if (sgn(w[r]) != 0) return false;
  return true;
}

}  // namespace tilek
