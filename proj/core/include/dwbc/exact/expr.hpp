#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dwbc/exact/multipoly.hpp"
#include "dwbc/exact/poly.hpp"
#include "dwbc/exact/series.hpp"

namespace dwbc {

// Expression tree for multivariate rational functions with polynomial leaves.
// Expansion binds every variable to center_j + eps_j and works in Series<T>.
template <class T>
class Expr {
 public:
  enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Poly1, PolyN };

  struct Node {
    Op op = Op::Const;
    T value{};
    int index = 0;  // variable index or exponent
    std::vector<Expr> kids;
    Poly<T> p;
    MultiPoly<T> mp;
    std::uint64_t support = 0;
  };

  Expr() : Expr(Field<T>::zero()) {}
  Expr(const T& c) {  // NOLINT(google-explicit-constructor)
    auto n = std::make_shared<Node>();
    n->op = Op::Const;
    n->value = c;
    node_ = std::move(n);
  }
  Expr(long c) : Expr(Field<T>::from_int(c)) {}  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(Field<T>::from_int(c)) {}   // NOLINT(google-explicit-constructor)

  static Expr var(int j) {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->index = j;
    n->support = std::uint64_t{1} << j;
    return Expr(std::move(n));
  }

  friend Expr operator+(const Expr& a, const Expr& b) { return binary(Op::Add, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return binary(Op::Sub, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return binary(Op::Mul, a, b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return binary(Op::Div, a, b); }
  friend Expr operator-(const Expr& a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Neg;
    n->kids = {a};
    n->support = a.support();
    return Expr(std::move(n));
  }

  friend Expr pow(const Expr& a, int k) {
    auto n = std::make_shared<Node>();
    n->op = Op::Pow;
    n->index = k;
    n->kids = {a};
    n->support = a.support();
    return Expr(std::move(n));
  }

  static Expr apply(const Poly<T>& p, const Expr& a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Poly1;
    n->p = p;
    n->kids = {a};
    n->support = a.support();
    return Expr(std::move(n));
  }

  static Expr apply(const MultiPoly<T>& p, const std::vector<Expr>& args) {
    if (static_cast<int>(args.size()) != p.nvars())
      fail(ErrorKind::InvalidConfig, "polynomial arity does not match argument count");
    auto n = std::make_shared<Node>();
    n->op = Op::PolyN;
    n->mp = p;
    n->kids = args;
    for (const auto& a : args) n->support |= a.support();
    return Expr(std::move(n));
  }

  std::uint64_t support() const { return node_->support; }
  const Node& node() const { return *node_; }

  T eval(const std::vector<T>& pt) const {
    std::unordered_map<const Node*, T> memo;
    return eval_rec(pt, memo);
  }

  Series<T> expand(const std::vector<T>& centers, const std::vector<int>& caps) const {
    std::unordered_map<const Node*, Series<T>> memo;
    return expand_rec(centers, caps, memo);
  }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Expr binary(Op op, const Expr& a, const Expr& b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->kids = {a, b};
    n->support = a.support() | b.support();
    return Expr(std::move(n));
  }

  T eval_rec(const std::vector<T>& pt, std::unordered_map<const Node*, T>& memo) const {
    auto it = memo.find(node_.get());
    if (it != memo.end()) return it->second;
    const Node& n = *node_;
    T r{};
    switch (n.op) {
      case Op::Const: r = n.value; break;
      case Op::Var: r = pt.at(static_cast<std::size_t>(n.index)); break;
      case Op::Add: r = n.kids[0].eval_rec(pt, memo) + n.kids[1].eval_rec(pt, memo); break;
      case Op::Sub: r = n.kids[0].eval_rec(pt, memo) - n.kids[1].eval_rec(pt, memo); break;
      case Op::Mul: r = n.kids[0].eval_rec(pt, memo) * n.kids[1].eval_rec(pt, memo); break;
      case Op::Neg: r = -n.kids[0].eval_rec(pt, memo); break;
      case Op::Div: {
        T den = n.kids[1].eval_rec(pt, memo);
        if (Field<T>::is_zero(den)) fail(ErrorKind::ZeroDenominator, "expression denominator vanishes");
        r = n.kids[0].eval_rec(pt, memo) / den;
        break;
      }
      case Op::Pow: {
        T base = n.kids[0].eval_rec(pt, memo);
        int k = n.index;
        if (k < 0) {
          if (Field<T>::is_zero(base)) fail(ErrorKind::ZeroDenominator, "negative power of zero");
          base = Field<T>::one() / base;
          k = -k;
        }
        r = Field<T>::one();
        for (int i = 0; i < k; ++i) r *= base;
        break;
      }
      case Op::Poly1: r = n.p(n.kids[0].eval_rec(pt, memo)); break;
      case Op::PolyN: {
        std::vector<T> args;
        for (const auto& k : n.kids) args.push_back(k.eval_rec(pt, memo));
        r = n.mp(args);
        break;
      }
    }
    memo.emplace(node_.get(), r);
    return r;
  }

  Series<T> expand_rec(const std::vector<T>& c, const std::vector<int>& caps,
                       std::unordered_map<const Node*, Series<T>>& memo) const {
    auto it = memo.find(node_.get());
    if (it != memo.end()) return it->second;
    const Node& n = *node_;
    Series<T> r;
    switch (n.op) {
      case Op::Const: r = Series<T>::constant(caps, n.value); break;
      case Op::Var: r = Series<T>::variable(caps, n.index, c.at(static_cast<std::size_t>(n.index))); break;
      case Op::Add: r = n.kids[0].expand_rec(c, caps, memo) + n.kids[1].expand_rec(c, caps, memo); break;
      case Op::Sub: r = n.kids[0].expand_rec(c, caps, memo) - n.kids[1].expand_rec(c, caps, memo); break;
      case Op::Mul: r = n.kids[0].expand_rec(c, caps, memo) * n.kids[1].expand_rec(c, caps, memo); break;
      case Op::Neg: r = -n.kids[0].expand_rec(c, caps, memo); break;
      case Op::Div:
        r = n.kids[0].expand_rec(c, caps, memo) * n.kids[1].expand_rec(c, caps, memo).inverse();
        break;
      case Op::Pow: r = n.kids[0].expand_rec(c, caps, memo).pow(n.index); break;
      case Op::Poly1: {
        Series<T> x = n.kids[0].expand_rec(c, caps, memo);
        const auto& co = n.p.coeffs();
        r = Series<T>::zero(caps);
        for (auto k = co.rbegin(); k != co.rend(); ++k) r = r * x + Series<T>::constant(caps, *k);
        break;
      }
      case Op::PolyN: {
        std::vector<Series<T>> args;
        for (const auto& k : n.kids) args.push_back(k.expand_rec(c, caps, memo));
        r = evaluate_poly(n.mp, args, n.kids, caps);
        break;
      }
    }
    memo.emplace(node_.get(), r);
    return r;
  }

  static int single_var(std::uint64_t s) {
    if (s == 0 || (s & (s - 1)) != 0) return -1;
    int j = 0;
    while (!(s & 1u)) {
      s >>= 1u;
      ++j;
    }
    return j;
  }

  static Series<T> evaluate_poly(const MultiPoly<T>& P, const std::vector<Series<T>>& args,
                                 const std::vector<Expr>& kids, const std::vector<int>& caps) {
    const int s = P.nvars();
    std::vector<int> vars(static_cast<std::size_t>(s));
    std::uint64_t seen = 0;
    bool separable = true;
    for (int j = 0; j < s; ++j) {
      int v = single_var(kids[static_cast<std::size_t>(j)].support());
      if (v < 0 || (seen >> v) & 1u) {
        separable = false;
        break;
      }
      seen |= std::uint64_t{1} << v;
      vars[static_cast<std::size_t>(j)] = v;
    }
    if (separable) return evaluate_separable(P, args, vars, caps);

    std::vector<std::vector<Series<T>>> pw(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
      int d = std::max(0, P.degree_in(j));
      auto& v = pw[static_cast<std::size_t>(j)];
      v.push_back(Series<T>::constant(caps, Field<T>::one()));
      for (int k = 1; k <= d; ++k) v.push_back(v.back() * args[static_cast<std::size_t>(j)]);
    }
    Series<T> acc = Series<T>::zero(caps);
    for (const auto& [e, coef] : P.terms()) {
      Series<T> m = Series<T>::constant(caps, coef);
      for (int j = 0; j < s; ++j) m = m * pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(e[static_cast<std::size_t>(j)])];
      acc = acc + m;
    }
    return acc;
  }

  // Each argument depends on its own series variable: contract the coefficient
  // tensor one mode at a time against the power tables of the arguments.
  static Series<T> evaluate_separable(const MultiPoly<T>& P, const std::vector<Series<T>>& args,
                                      const std::vector<int>& vars, const std::vector<int>& caps) {
    const int s = P.nvars();
    if (s == 0) return Series<T>::constant(caps, P.coeff({}));
    if (P.is_zero()) return Series<T>::zero(caps);
    const int nv = static_cast<int>(caps.size());

    std::vector<int> deg(static_cast<std::size_t>(s)), klo(static_cast<std::size_t>(s)), khi(static_cast<std::size_t>(s)),
        kprec(static_cast<std::size_t>(s));
    std::vector<std::vector<std::vector<T>>> table(static_cast<std::size_t>(s));  // [j][e][k - klo]
    for (int j = 0; j < s; ++j) {
      const std::size_t ju = static_cast<std::size_t>(j);
      deg[ju] = std::max(0, P.degree_in(j));
      const int v = vars[ju];
      std::vector<Series<T>> pw;
      pw.push_back(Series<T>::constant(caps, Field<T>::one()));
      for (int k = 1; k <= deg[ju]; ++k) pw.push_back(pw.back() * args[ju]);
      int lo = kExact, hi = -kExact, pr = kExact;
      for (const auto& q : pw) {
        pr = std::min(pr, q.prec(v));
        if (q.is_zero()) continue;
        lo = std::min(lo, q.lo(v));
        hi = std::max(hi, q.top(v));
      }
      if (lo > hi) {
        lo = 0;
        hi = -1;
      }
      hi = std::min(hi, pr);
      klo[ju] = lo;
      khi[ju] = hi;
      kprec[ju] = pr;
      auto& tb = table[ju];
      tb.assign(pw.size(), std::vector<T>(static_cast<std::size_t>(std::max(0, hi - lo + 1)), Field<T>::zero()));
      for (std::size_t e = 0; e < pw.size(); ++e) {
        for (const auto& [ex, cf] : pw[e].terms()) {
          if (ex[static_cast<std::size_t>(v)] > hi) continue;
          tb[e][static_cast<std::size_t>(ex[static_cast<std::size_t>(v)] - lo)] = cf;
        }
      }
    }

    // dense coefficient tensor, variable 0 slowest
    std::vector<std::size_t> dims(static_cast<std::size_t>(s));
    std::size_t total = 1;
    for (int j = 0; j < s; ++j) {
      dims[static_cast<std::size_t>(j)] = static_cast<std::size_t>(deg[static_cast<std::size_t>(j)] + 1);
      total *= dims[static_cast<std::size_t>(j)];
    }
    std::vector<T> cur(total, Field<T>::zero());
    for (const auto& [e, cf] : P.terms()) {
      std::size_t fi = 0;
      for (int j = 0; j < s; ++j) fi = fi * dims[static_cast<std::size_t>(j)] + static_cast<std::size_t>(e[static_cast<std::size_t>(j)]);
      cur[fi] = cf;
    }
    for (int j = 0; j < s; ++j) {
      const std::size_t ju = static_cast<std::size_t>(j);
      std::size_t outer = 1, inner = 1;
      for (int i = 0; i < j; ++i) outer *= dims[static_cast<std::size_t>(i)];
      for (int i = j + 1; i < s; ++i) inner *= dims[static_cast<std::size_t>(i)];
      const std::size_t din = dims[ju];
      const std::size_t dout = static_cast<std::size_t>(std::max(0, khi[ju] - klo[ju] + 1));
      std::vector<T> nxt(outer * dout * inner, Field<T>::zero());
      for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t e = 0; e < din; ++e)
          for (std::size_t i = 0; i < inner; ++i) {
            const T& cv = cur[(o * din + e) * inner + i];
            if (Field<T>::is_zero(cv)) continue;
            const auto& row = table[ju][e];
            for (std::size_t k = 0; k < dout; ++k) {
              if (Field<T>::is_zero(row[k])) continue;
              nxt[(o * dout + k) * inner + i] += cv * row[k];
            }
          }
      dims[ju] = dout;
      cur = std::move(nxt);
    }

    std::vector<int> prec(static_cast<std::size_t>(nv), kExact);
    for (int j = 0; j < s; ++j) prec[static_cast<std::size_t>(vars[static_cast<std::size_t>(j)])] = kprec[static_cast<std::size_t>(j)];
    Series<T> acc = Series<T>::zero(caps);
    // assemble through monomials; the contracted tensor is small
    std::vector<int> k(static_cast<std::size_t>(s), 0);
    bool empty = false;
    for (int j = 0; j < s; ++j)
      if (dims[static_cast<std::size_t>(j)] == 0) empty = true;
    std::vector<std::pair<std::vector<int>, T>> mons;
    if (!empty) {
      for (std::size_t idx = 0; idx < cur.size(); ++idx) {
        if (!Field<T>::is_zero(cur[idx])) {
          std::vector<int> ex(static_cast<std::size_t>(nv), 0);
          for (int j = 0; j < s; ++j) ex[static_cast<std::size_t>(vars[static_cast<std::size_t>(j)])] = k[static_cast<std::size_t>(j)] + klo[static_cast<std::size_t>(j)];
          mons.emplace_back(std::move(ex), cur[idx]);
        }
        for (int j = s; j-- > 0;) {
          if (++k[static_cast<std::size_t>(j)] < static_cast<int>(dims[static_cast<std::size_t>(j)])) break;
          k[static_cast<std::size_t>(j)] = 0;
        }
      }
    }
    return Series<T>::from_terms(caps, mons, prec);
  }

  std::shared_ptr<const Node> node_;
};

using ExactExpr = Expr<Rational>;

}  // namespace dwbc
