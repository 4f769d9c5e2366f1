#include "qbool/kernels.hpp"

#include <limits>
#include <stdexcept>

#include "qbool/error.hpp"

namespace qbool::kernels {

namespace {

using word = BitVector::word_type;
constexpr std::size_t W = BitVector::word_bits;

std::int64_t as_signed(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

std::size_t cochain_dim(std::size_t group_order, std::size_t degree) {
  const std::size_t m = group_order - 1;
  std::size_t d = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (m != 0 && d > std::numeric_limits<std::size_t>::max() / m) return std::numeric_limits<std::size_t>::max();
    d *= m;
  }
  return d;
}

TupleCodec::TupleCodec(std::size_t group_order, std::size_t degree)
    : m_(group_order - 1), n_(degree), size_(cochain_dim(group_order, degree)) {
  if (size_ == std::numeric_limits<std::size_t>::max()) throw std::overflow_error("TupleCodec: cochain dimension overflows");
}

void TupleCodec::decode(std::size_t index, std::vector<Elem>& out) const {
  out.resize(n_);
  for (std::size_t i = n_; i-- > 0;) {
    out[i] = static_cast<Elem>(index % m_ + 1);
    index /= m_;
  }
}

std::size_t TupleCodec::encode(const Elem* tuple, std::size_t len) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < len; ++i) idx = idx * m_ + (tuple[i] - 1);
  return idx;
}

std::size_t TupleCodec::encode(const std::vector<Elem>& tuple) const { return encode(tuple.data(), tuple.size()); }

// ---------------------------------------------------------------------------
// coboundary columns

namespace {

// Rows of the column d^n(e_t): tuples (g_1..g_{n+1}) having some face equal
// to t. The outer faces contribute m rows each; inner face i contributes the
// m - 1 factorisations g_i g_{i+1} = t_i with both factors non-trivial.
void fill_column(const FiniteGroup& g, const TupleCodec& cn, const TupleCodec& cn1, std::size_t t,
                 std::vector<Elem>& tup, std::vector<Elem>& row, BitVector& col) {
  const std::size_t n = cn.degree();
  const Elem order = static_cast<Elem>(g.order());
  cn.decode(t, tup);
  row.resize(n + 1);
  for (Elem x = 1; x < order; ++x) {
    row[0] = x;
    std::copy(tup.begin(), tup.end(), row.begin() + 1);
    col.flip(cn1.encode(row));
    std::copy(tup.begin(), tup.end(), row.begin());
    row[n] = x;
    col.flip(cn1.encode(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) row[j] = tup[j];
    for (std::size_t j = i + 1; j < n; ++j) row[j + 1] = tup[j];
    for (Elem x = 1; x < order; ++x) {
      if (x == tup[i]) continue;
      row[i] = x;
      row[i + 1] = g.mul(g.inv(x), tup[i]);
      col.flip(cn1.encode(row));
    }
  }
}

}  // namespace

std::vector<BitVector> coboundary_columns(const FiniteGroup& g, std::size_t n) {
  const TupleCodec cn(g.order(), n), cn1(g.order(), n + 1);
  std::vector<BitVector> cols(cn.size(), BitVector(cn1.size()));
  if (n == 0) return cols;
#pragma omp parallel
  {
    std::vector<Elem> tup, row;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < as_signed(cn.size()); ++t)
      fill_column(g, cn, cn1, static_cast<std::size_t>(t), tup, row, cols[static_cast<std::size_t>(t)]);
  }
  return cols;
}

std::vector<BitVector> coboundary_columns_serial(const FiniteGroup& g, std::size_t n) {
  const TupleCodec cn(g.order(), n), cn1(g.order(), n + 1);
  std::vector<BitVector> cols(cn.size(), BitVector(cn1.size()));
  if (n == 0) return cols;
  std::vector<Elem> row, face(n);
  for (std::size_t r = 0; r < cn1.size(); ++r) {
    cn1.decode(r, row);
    cols[cn.encode(row.data() + 1, n)].flip(r);
    for (std::size_t i = 0; i < n; ++i) {
      const Elem prod = g.mul(row[i], row[i + 1]);
      if (prod == 0) continue;
      for (std::size_t j = 0, k = 0; j <= n; ++j) {
        if (j == i + 1) continue;
        face[k++] = j == i ? prod : row[j];
      }
      cols[cn.encode(face)].flip(r);
    }
    cols[cn.encode(row.data(), n)].flip(r);
  }
  return cols;
}

// ---------------------------------------------------------------------------
// apply_coboundary

namespace {

bool coboundary_entry(const FiniteGroup& g, const TupleCodec& cn, const BitVector& f, const std::vector<Elem>& row,
                      std::vector<Elem>& face) {
  const std::size_t n = cn.degree();
  bool bit = f.get(cn.encode(row.data() + 1, n)) ^ f.get(cn.encode(row.data(), n));
  for (std::size_t i = 0; i < n; ++i) {
    const Elem prod = g.mul(row[i], row[i + 1]);
    if (prod == 0) continue;
    std::size_t k = 0;
    for (std::size_t j = 0; j < i; ++j) face[k++] = row[j];
    face[k++] = prod;
    for (std::size_t j = i + 2; j <= n; ++j) face[k++] = row[j];
    bit ^= f.get(cn.encode(face));
  }
  return bit;
}

}  // namespace

BitVector apply_coboundary(const FiniteGroup& g, std::size_t n, const BitVector& f) {
  const TupleCodec cn(g.order(), n), cn1(g.order(), n + 1);
  if (f.size() != cn.size()) throw DomainError("dimension_mismatch", "apply_coboundary: cochain has wrong length");
  BitVector out(cn1.size());
  if (n == 0) return out;
  auto words = out.words();
#pragma omp parallel
  {
    std::vector<Elem> row, face(n);
#pragma omp for schedule(static)
    for (std::int64_t w = 0; w < as_signed(words.size()); ++w) {
      word acc = 0;
      const std::size_t lo = static_cast<std::size_t>(w) * W;
      const std::size_t hi = std::min(lo + W, cn1.size());
      for (std::size_t r = lo; r < hi; ++r) {
        cn1.decode(r, row);
        if (coboundary_entry(g, cn, f, row, face)) acc |= word{1} << (r - lo);
      }
      words[static_cast<std::size_t>(w)] = acc;
    }
  }
  return out;
}

BitVector apply_coboundary_serial(const FiniteGroup& g, std::size_t n, const BitVector& f) {
  const TupleCodec cn(g.order(), n), cn1(g.order(), n + 1);
  if (f.size() != cn.size()) throw DomainError("dimension_mismatch", "apply_coboundary: cochain has wrong length");
  BitVector out(cn1.size());
  if (n == 0) return out;
  std::vector<Elem> row, face(n);
  for (std::size_t r = 0; r < cn1.size(); ++r) {
    cn1.decode(r, row);
    if (coboundary_entry(g, cn, f, row, face)) out.set(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// cup

BitVector cup(std::size_t group_order, std::size_t p, std::size_t q, const BitVector& c, const BitVector& d) {
  const std::size_t dp = cochain_dim(group_order, p), dq = cochain_dim(group_order, q);
  if (c.size() != dp || d.size() != dq) throw DomainError("dimension_mismatch", "cup: cochain has wrong length");
  BitVector out(dp * dq);
  auto words = out.words();
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < as_signed(words.size()); ++w) {
    word acc = 0;
    const std::size_t lo = static_cast<std::size_t>(w) * W;
    const std::size_t hi = std::min(lo + W, dp * dq);
    for (std::size_t b = lo; b < hi; ++b)
      if (c.get(b / dq) && d.get(b % dq)) acc |= word{1} << (b - lo);
    words[static_cast<std::size_t>(w)] = acc;
  }
  return out;
}

BitVector cup_serial(std::size_t group_order, std::size_t p, std::size_t q, const BitVector& c, const BitVector& d) {
  const std::size_t dp = cochain_dim(group_order, p), dq = cochain_dim(group_order, q);
  if (c.size() != dp || d.size() != dq) throw DomainError("dimension_mismatch", "cup: cochain has wrong length");
  BitVector out(dp * dq);
  for (std::size_t i : c.support())
    for (std::size_t j : d.support()) out.set(i * dq + j);
  return out;
}

// ---------------------------------------------------------------------------
// pullback

BitVector pullback(const GroupHom& h, std::size_t n, const BitVector& f) {
  const TupleCodec src(h.source->order(), n), dst(h.target->order(), n);
  if (f.size() != dst.size()) throw DomainError("dimension_mismatch", "pullback: cochain has wrong length");
  BitVector out(src.size());
  auto words = out.words();
#pragma omp parallel
  {
    std::vector<Elem> tup;
#pragma omp for schedule(static)
    for (std::int64_t w = 0; w < as_signed(words.size()); ++w) {
      word acc = 0;
      const std::size_t lo = static_cast<std::size_t>(w) * W;
      const std::size_t hi = std::min(lo + W, src.size());
      for (std::size_t b = lo; b < hi; ++b) {
        src.decode(b, tup);
        bool trivial = false;
        for (auto& x : tup) {
          x = h(x);
          trivial = trivial || x == 0;
        }
        if (!trivial && f.get(dst.encode(tup))) acc |= word{1} << (b - lo);
      }
      words[static_cast<std::size_t>(w)] = acc;
    }
  }
  return out;
}

BitVector pullback_serial(const GroupHom& h, std::size_t n, const BitVector& f) {
  const TupleCodec src(h.source->order(), n), dst(h.target->order(), n);
  if (f.size() != dst.size()) throw DomainError("dimension_mismatch", "pullback: cochain has wrong length");
  BitVector out(src.size());
  // odometer over tuples in index order
  std::vector<Elem> tup(n, 1), img(n);
  for (std::size_t b = 0; b < src.size(); ++b) {
    bool trivial = false;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = h(tup[i]);
      trivial = trivial || img[i] == 0;
    }
    if (!trivial && f.get(dst.encode(img))) out.set(b);
    for (std::size_t i = n; i-- > 0;) {
      if (++tup[i] < h.source->order()) break;
      tup[i] = 1;
    }
  }
  return out;
}

}  // namespace qbool::kernels
