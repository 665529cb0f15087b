#include "polynomial.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ultk {

PolyContextPtr make_context(VariableTable table, CoefficientField field, MonomialOrder order) {
  return std::make_shared<const PolyContext>(
      PolyContext{std::move(table), std::move(field), std::move(order)});
}

void require_same_ambient(const Polynomial& a, const Polynomial& b, const char* op) {
  if (!a.context()->same_ambient(*b.context())) {
    throw AmbientMismatch(std::string(op) + ": operands live in different ambients");
  }
}

Polynomial::Polynomial(PolyContextPtr ctx, std::vector<Term> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const auto& field = ctx_->field;
  const auto& order = ctx_->order;
  const auto& table = ctx_->table;
  for (auto& t : terms_) {
    if (t.mono.size() != table.size()) {
      throw AmbientMismatch("term exponent vector does not match the variable table");
    }
    t.coeff = field.canonical(t.coeff);
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono, table) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Term& t) { return field.is_zero(t.coeff); }),
            out.end());
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(PolyContextPtr ctx, const Coeff& c) {
  auto n = ctx->table.size();
  std::vector<Term> ts;
  ts.push_back(Term{Monomial::one(n), c});
  return Polynomial(std::move(ctx), std::move(ts));
}

Polynomial Polynomial::variable(PolyContextPtr ctx, std::size_t index) {
  auto n = ctx->table.size();
  std::vector<Term> ts;
  ts.push_back(Term{Monomial::variable(n, index), ctx->field.one()});
  return Polynomial(std::move(ctx), std::move(ts));
}

Polynomial Polynomial::from_monomial(PolyContextPtr ctx, Monomial m, Coeff c) {
  std::vector<Term> ts;
  ts.push_back(Term{std::move(m), std::move(c)});
  return Polynomial(std::move(ctx), std::move(ts));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ArgError("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ambient(*this, other, "add");
  const Polynomial rhs = other.ctx_->order == ctx_->order ? other : other.with_order(ctx_->order);
  const auto& field = ctx_->field;
  const auto& order = ctx_->order;
  const auto& table = ctx_->table;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = order.compare(terms_[i].mono, rhs.terms_[j].mono, table);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      Coeff s = field.add(terms_[i].coeff, rhs.terms_[j].coeff);
      if (!field.is_zero(s)) out.push_back(Term{terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.push_back(rhs.terms_[j]);
  Polynomial r(ctx_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, ctx_->field.neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ambient(*this, other, "multiply");
  const auto& field = ctx_->field;
  const auto& order = ctx_->order;
  const auto& table = ctx_->table;
  auto cmp = [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, table) > 0; };
  std::map<Monomial, Coeff, decltype(cmp)> acc(cmp);
  for (const auto& ta : terms_) {
    for (const auto& tb : other.terms_) {
      Monomial m = ta.mono * tb.mono;
      Coeff c = field.mul(ta.coeff, tb.coeff);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = field.add(it->second, c);
      }
    }
  }
  Polynomial r(ctx_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!field.is_zero(c)) r.terms_.push_back(Term{m, c});
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ctx_->same_ambient(*other.ctx_)) return false;
  const Polynomial rhs = other.ctx_->order == ctx_->order ? other : other.with_order(ctx_->order);
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const auto& field = ctx_->field;
  if (field.is_zero(c)) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::term_multiple(const Monomial& m, const Coeff& c) const {
  const auto& field = ctx_->field;
  if (field.is_zero(c)) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, field.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ctx_->field.inv(leading_term().coeff));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = Polynomial::constant(ctx_, ctx_->field.one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = e > 1 ? base * base : base;
    e >>= 1u;
  }
  return result;
}

std::optional<std::uint64_t> Polynomial::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ctx_->table));
  return d;
}

bool Polynomial::is_homogeneous(std::uint64_t* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  std::uint64_t d = terms_.front().mono.weighted_degree(ctx_->table);
  for (const auto& t : terms_) {
    if (t.mono.weighted_degree(ctx_->table) != d) return false;
  }
  if (degree_out) *degree_out = d;
  return true;
}

std::map<std::uint64_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::uint64_t, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    buckets[t.mono.weighted_degree(ctx_->table)].push_back(t);
  }
  std::map<std::uint64_t, Polynomial> out;
  for (auto& [d, ts] : buckets) {
    out.emplace(d, Polynomial(ctx_, std::move(ts)));
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment,
                                  const PolyContextPtr& target) const {
  const auto& tt = target->table;
  if (target->field != ctx_->field) {
    throw AmbientMismatch("substitute: source and target fields differ");
  }
  // Resolve each source variable to its image once.
  std::vector<Polynomial> images;
  images.reserve(table().size());
  for (std::size_t i = 0; i < table().size(); ++i) {
    const auto& name = table().name(i);
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      if (!it->second.context()->same_ambient(*target)) {
        throw AmbientMismatch("substitute: image of '" + name +
                              "' does not live in the target ambient");
      }
      images.push_back(it->second.with_context(target));
    } else if (auto idx = tt.index_of(name)) {
      images.push_back(Polynomial::variable(target, *idx));
    } else {
      throw ArgError("substitute: variable '" + name +
                     "' has no assigned image and no identity default in the target");
    }
  }
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < table().size(); ++i) {
      auto e = t.mono.exponent(i);
      if (e > 0) prod = prod * images[i].pow(e);
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == ctx_->order) return *this;
  return with_context(make_context(ctx_->table, ctx_->field, order));
}

Polynomial Polynomial::with_context(const PolyContextPtr& ctx) const {
  if (ctx == ctx_) return *this;
  if (!ctx->same_ambient(*ctx_)) {
    throw AmbientMismatch("with_context: ambients differ");
  }
  return Polynomial(ctx, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = ctx_->field;
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = field.neg(c);
    std::string cs = field.to_string(c);
    if (t.mono.is_one()) {
      out += cs;
    } else if (field.is_one(c)) {
      out += t.mono.to_string(ctx_->table);
    } else {
      out += cs + "*" + t.mono.to_string(ctx_->table);
    }
  }
  return out;
}

}  // namespace ultk
