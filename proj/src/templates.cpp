#include "triplication/templates.hpp"

#include <algorithm>
#include <set>

namespace triplication {

namespace {

Pairing aligned_to(const Pairing& reference, const Pairing& p) {
  std::vector<Pair> pairs = p.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (difference_sign(pairs[i], p.modulus()) != difference_sign(reference[i], reference.modulus())) {
      std::swap(pairs[i].x, pairs[i].y);
    }
  }
  return Pairing(p.modulus(), std::move(pairs), true);
}

}  // namespace

TemplateBase make_base(const Pairing& t0, const Pairing& t1, const Pairing& t2) {
  if (t0.modulus() != t1.modulus() || t0.modulus() != t2.modulus()) {
    throw Error(ErrorCode::InvalidInput, "base pairings have different orders");
  }
  StarterClass c0 = classify(t0);
  if (c0.kind < StarterKind::Starter) {
    throw Error(ErrorCode::InvalidInput, "T0 " + format_pairs(t0.pairs()) + " is not a starter: " + c0.witness);
  }
  for (const Pairing* p : {&t1, &t2}) {
    StarterClass c = classify(*p);
    if (c.kind < StarterKind::Pseudostarter) {
      throw Error(ErrorCode::InvalidInput,
                  "pairing " + format_pairs(p->pairs()) + " is not a pseudostarter: " + c.witness);
    }
  }
  if (!is_special_pair(t1, t2)) {
    throw Error(ErrorCode::SpecialPairViolation, "(" + format_pairs(t1.pairs()) + ", " +
                                                     format_pairs(t2.pairs()) + ") is not a special pair");
  }
  Pairing o0 = order_by_difference(t0);
  Pairing o1 = aligned_to(o0, order_by_difference(t1));
  Pairing o2 = aligned_to(o0, order_by_difference(t2));
  return TemplateBase(std::move(o0), std::move(o1), std::move(o2));
}

TemplateBase one_starter_base(const Pairing& t) { return make_base(t, t, conjugate(t)); }

TemplateBase epicycloidal_base(const Pairing& t0, int mu) {
  Pairing e = epicycloidal(t0.modulus(), mu);
  return make_base(t0, e, conjugate(e));
}

Pairing build_template(const TemplateBase& base, int key) {
  const int m = base.order();
  if (key <= 0 || key >= m) {
    throw Error(ErrorCode::InvalidInput, "key " + std::to_string(key) + " is not in 1.." + std::to_string(m - 1));
  }
  std::vector<Pair> pairs{{key, key}};
  for (std::size_t i = 0; i < base.t0().size(); ++i) {
    pairs.push_back(base.t0()[i]);
    pairs.push_back({mod(key + base.t1()[i].x, m), mod(key + base.t1()[i].y, m)});
    pairs.push_back({mod(key + base.t2()[i].x, m), mod(key + base.t2()[i].y, m)});
  }
  return Pairing(m, std::move(pairs));
}

std::vector<int> admissible_keys(const TemplateBase& base) {
  std::vector<int> keys;
  for (int key = 1; key < base.order(); ++key) {
    Pairing candidate = build_template(base, key);
    std::set<Pair> distinct(candidate.begin(), candidate.end());
    if (distinct.size() == candidate.size()) keys.push_back(key);
  }
  return keys;
}

TriplicationTable template_table(const TemplateBase& base, int key) {
  std::vector<int> keys = admissible_keys(base);
  if (!std::binary_search(keys.begin(), keys.end(), key)) {
    throw Error(ErrorCode::KeyNotAdmissible, "key " + std::to_string(key) + " repeats a pair in the template");
  }
  return TriplicationTable::validate(build_template(base, key));
}

TriplicationTable one_starter_table(const Pairing& t, int key) { return template_table(one_starter_base(t), key); }

TriplicationTable three_starter_table(const Pairing& t0, const Pairing& t1, const Pairing& t2, int key) {
  for (const Pairing* p : {&t1, &t2}) {
    if (classify(*p).kind < StarterKind::Starter) {
      throw Error(ErrorCode::InvalidInput, "pairing " + format_pairs(p->pairs()) + " is not a starter");
    }
  }
  return template_table(make_base(t0, t1, t2), key);
}

Pairing epicycloidal(int m, int mu) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidInput, "order must be odd and >= 3");
  if (mu < 2 || mu > m - 2) {
    throw Error(ErrorCode::InvalidInput, "multiplier " + std::to_string(mu) + " is not in 2.." + std::to_string(m - 2));
  }
  auto inv = inverse_mod(mu - 1, m);
  if (!inv) {
    throw Error(ErrorCode::MultiplierNotInvertible,
                "mu - 1 = " + std::to_string(mu - 1) + " is not invertible modulo " + std::to_string(m));
  }
  std::vector<Pair> pairs;
  for (int i = 1; i <= (m - 1) / 2; ++i) {
    int x = mod(static_cast<long long>(*inv) * i, m);
    pairs.push_back({x, mod(static_cast<long long>(mu) * x, m)});
  }
  return Pairing(m, std::move(pairs), true);
}

Pairing patterned_starter(int m) {
  if (m < 3 || m % 2 == 0) throw Error(ErrorCode::InvalidInput, "order must be odd and >= 3");
  std::vector<Pair> pairs;
  for (int x = 1; x <= (m - 1) / 2; ++x) pairs.push_back({x, m - x});
  return canonical_order(Pairing(m, std::move(pairs)));
}

}  // namespace triplication
