#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ury/dyadic.hpp"
#include "ury/errors.hpp"

namespace ury::disring {

/// What an instance claims about itself; the claim set decides which axiom
/// groups check_axioms runs.
struct Claims {
  bool halved = false;
  bool unital = false;           // carries mul and one
  bool dis_associative = false;
  bool totally_ordered = false;  // enables the max/min shortcut for sup/inf
};

// An instance provides: Elem, name(), claims(), zero(), add, dis, eq, show,
// sample(rng), and optionally one()/mul (unital), halve (halved),
// less (totally ordered), carrier() (finite, switches the checker to
// exhaustive enumeration).

/// Derived order: a <= b iff a + (a dis b) = b.
template <typename I, typename E = typename I::Elem>
bool leq(const I& inst, const E& a, const E& b) {
  return inst.eq(inst.add(a, inst.dis(a, b)), b);
}

/// Halved-formula supremum, (a + b + a dis b)/2. Cross-check path.
template <typename I, typename E = typename I::Elem>
E sup2_formula(const I& inst, const E& a, const E& b) {
  return inst.halve(inst.add(inst.add(a, b), inst.dis(a, b)));
}

/// Halved-formula infimum, ((a + b) dis (a dis b))/2.
template <typename I, typename E = typename I::Elem>
E inf2_formula(const I& inst, const E& a, const E& b) {
  return inst.halve(inst.dis(inst.add(a, b), inst.dis(a, b)));
}

/// Least upper bound under the derived order. Totally ordered instances
/// short-circuit to max; otherwise the halved formula applies. Throws
/// MissingHalving when neither route exists.
template <typename I, typename E = typename I::Elem>
E sup2(const I& inst, const E& a, const E& b) {
  if constexpr (requires { inst.less(a, b); }) {
    return inst.less(a, b) ? b : a;
  } else if constexpr (requires { inst.halve(a); }) {
    return sup2_formula(inst, a, b);
  } else {
    throw MissingHalving(inst.name() + ": sup needs a halving map or a decidable order");
  }
}

template <typename I, typename E = typename I::Elem>
E inf2(const I& inst, const E& a, const E& b) {
  if constexpr (requires { inst.less(a, b); }) {
    return inst.less(a, b) ? a : b;
  } else if constexpr (requires { inst.halve(a); }) {
    return inf2_formula(inst, a, b);
  } else {
    throw MissingHalving(inst.name() + ": inf needs a halving map or a decidable order");
  }
}

template <typename I, typename E = typename I::Elem>
E halve(const I& inst, const E& a) {
  if constexpr (requires { inst.halve(a); }) {
    return inst.halve(a);
  } else {
    throw MissingHalving(inst.name() + ": no halving map");
  }
}

/// a -> b := sup{a, b} dis a; how far past a one must go to reach b.
template <typename I, typename E = typename I::Elem>
E arrow(const I& inst, const E& a, const E& b) {
  return inst.dis(sup2(inst, a, b), a);
}

struct AxiomResult {
  std::string name;
  bool holds = true;
  std::string witness;            // "(a, b, x)" of the first failure
  bool witness_reconfirmed = false;  // the witness re-evaluated to a failure
};

struct AxiomReport {
  std::string instance;
  bool exhaustive = false;
  std::size_t tuples_checked = 0;
  std::vector<AxiomResult> axioms;

  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.holds) return false;
    return true;
  }
  std::string str() const;
};

namespace detail {

template <typename I, typename E = typename I::Elem>
std::vector<E> sample_pool(const I& inst, std::size_t budget, std::uint64_t seed,
                           bool& exhaustive) {
  if constexpr (requires { inst.carrier(); }) {
    exhaustive = true;
    return inst.carrier();
  } else {
    exhaustive = false;
    std::mt19937_64 rng(seed);
    std::vector<E> pool;
    pool.push_back(inst.zero());
    while (pool.size() < budget) pool.push_back(inst.sample(rng));
    return pool;
  }
}

}  // namespace detail

/// Evaluates every axiom in the claimed groups on element triples: the full
/// triple product for finite carriers, otherwise `sample_budget` random
/// triples. Failures are data, not errors; each failed axiom carries the
/// first witness triple, re-evaluated for confirmation.
template <typename I>
AxiomReport check_axioms(const I& inst, std::size_t sample_budget,
                         std::uint64_t seed = 0x75ca1ab1eULL) {
  using E = typename I::Elem;
  const Claims cl = inst.claims();

  AxiomReport report;
  report.instance = inst.name();

  struct Axiom {
    std::string name;
    std::function<bool(const E&, const E&, const E&)> pred;
  };
  std::vector<Axiom> axioms;
  const E zero = inst.zero();
  auto eq = [&inst](const E& x, const E& y) { return inst.eq(x, y); };
  auto add = [&inst](const E& x, const E& y) { return inst.add(x, y); };
  auto dd = [&inst](const E& x, const E& y) { return inst.dis(x, y); };
  auto le = [&inst](const E& x, const E& y) { return leq(inst, x, y); };

  axioms.push_back({"add-assoc", [=](const E& a, const E& b, const E& x) {
                      return eq(add(add(a, b), x), add(a, add(b, x)));
                    }});
  axioms.push_back({"add-comm", [=](const E& a, const E& b, const E&) {
                      return eq(add(a, b), add(b, a));
                    }});
  axioms.push_back({"add-unit", [=](const E& a, const E&, const E&) {
                      return eq(add(a, zero), a);
                    }});
  axioms.push_back({"dis-comm", [=](const E& a, const E& b, const E&) {
                      return eq(dd(a, b), dd(b, a));
                    }});
  axioms.push_back({"dis-unit", [=](const E& a, const E&, const E&) {
                      return eq(dd(a, zero), a);
                    }});
  axioms.push_back({"dis-self", [=](const E& a, const E&, const E&) {
                      return eq(dd(a, a), zero);
                    }});
  axioms.push_back({"dis-separates", [=](const E& a, const E& b, const E&) {
                      return !eq(dd(a, b), zero) || eq(a, b);
                    }});
  axioms.push_back({"dis-additivity", [=](const E& a, const E& b, const E& x) {
                      return eq(dd(add(a, x), add(b, x)), dd(a, b));
                    }});
  axioms.push_back({"dis-doubling", [=](const E& a, const E& b, const E&) {
                      return eq(dd(add(a, a), add(b, b)), add(dd(a, b), dd(a, b)));
                    }});
  axioms.push_back({"halved-order", [=](const E& a, const E& b, const E&) {
                      return !le(add(a, a), add(b, b)) || le(a, b);
                    }});
  axioms.push_back({"triangle", [=](const E& a, const E& b, const E& x) {
                      return le(dd(a, b), add(dd(a, x), dd(b, x)));
                    }});
  axioms.push_back({"cancellation", [=](const E& a, const E& b, const E& x) {
                      return eq(add(a, x), add(b, x)) == eq(a, b);
                    }});

  if constexpr (requires(E a) { inst.halve(a); }) {
    if (cl.halved) {
      auto hv = [&inst](const E& x) { return inst.halve(x); };
      axioms.push_back({"halve-splits", [=](const E& a, const E&, const E&) {
                          return eq(add(hv(a), hv(a)), a);
                        }});
      axioms.push_back({"halve-additive", [=](const E& a, const E& b, const E&) {
                          return eq(hv(add(a, b)), add(hv(a), hv(b)));
                        }});
      axioms.push_back({"halve-double-inverse", [=](const E& a, const E&, const E&) {
                          return eq(hv(add(a, a)), a);
                        }});
    }
  }

  if (cl.halved || cl.totally_ordered) {
    auto sp = [&inst](const E& x, const E& y) { return sup2(inst, x, y); };
    auto in = [&inst](const E& x, const E& y) { return inf2(inst, x, y); };
    axioms.push_back({"sup-upper-bound", [=](const E& a, const E& b, const E&) {
                        return le(a, sp(a, b)) && le(b, sp(a, b));
                      }});
    axioms.push_back({"sup-least", [=](const E& a, const E& b, const E& x) {
                        return !(le(a, x) && le(b, x)) || le(sp(a, b), x);
                      }});
    axioms.push_back({"inf-lower-bound", [=](const E& a, const E& b, const E&) {
                        return le(in(a, b), a) && le(in(a, b), b);
                      }});
    axioms.push_back({"inf-greatest", [=](const E& a, const E& b, const E& x) {
                        return !(le(x, a) && le(x, b)) || le(x, in(a, b));
                      }});
    axioms.push_back({"sup-plus-inf", [=](const E& a, const E& b, const E&) {
                        return eq(add(sp(a, b), in(a, b)), add(a, b));
                      }});
    axioms.push_back({"dis-of-sup-inf", [=](const E& a, const E& b, const E&) {
                        return eq(dd(a, b), dd(sp(a, b), in(a, b)));
                      }});
    axioms.push_back({"sup-additive", [=](const E& a, const E& b, const E& x) {
                        return eq(sp(add(a, x), add(b, x)), add(sp(a, b), x));
                      }});
    auto ar = [&inst](const E& x, const E& y) { return arrow(inst, x, y); };
    axioms.push_back({"arrow-self", [=](const E& a, const E&, const E&) {
                        return eq(ar(a, a), zero);
                      }});
    axioms.push_back({"arrow-to-zero", [=](const E& a, const E&, const E&) {
                        return eq(ar(a, zero), zero);
                      }});
    axioms.push_back({"arrow-from-zero", [=](const E& a, const E&, const E&) {
                        return eq(ar(zero, a), a);
                      }});
    axioms.push_back({"arrow-zero-iff-geq", [=](const E& a, const E& b, const E&) {
                        return eq(ar(a, b), zero) == le(b, a);
                      }});
    axioms.push_back({"dis-is-arrow-sum", [=](const E& a, const E& b, const E&) {
                        return eq(dd(a, b), add(ar(a, b), ar(b, a)));
                      }});
    axioms.push_back({"dis-is-arrow-sup", [=](const E& a, const E& b, const E&) {
                        return eq(dd(a, b), sp(ar(a, b), ar(b, a)));
                      }});
  }

  if constexpr (requires(E a) { inst.halve(a); inst.less(a, a); }) {
    if (cl.halved && cl.totally_ordered) {
      axioms.push_back({"sup-formula-agrees", [&inst, eq](const E& a, const E& b, const E&) {
                          return eq(sup2(inst, a, b), sup2_formula(inst, a, b));
                        }});
      axioms.push_back({"inf-formula-agrees", [&inst, eq](const E& a, const E& b, const E&) {
                          return eq(inf2(inst, a, b), inf2_formula(inst, a, b));
                        }});
    }
  }

  if constexpr (requires(E a) { inst.mul(a, a); inst.one(); }) {
    if (cl.unital) {
      auto mul = [&inst](const E& x, const E& y) { return inst.mul(x, y); };
      const E one = inst.one();
      axioms.push_back({"mul-assoc", [=](const E& a, const E& b, const E& x) {
                          return eq(mul(mul(a, b), x), mul(a, mul(b, x)));
                        }});
      axioms.push_back({"mul-comm", [=](const E& a, const E& b, const E&) {
                          return eq(mul(a, b), mul(b, a));
                        }});
      axioms.push_back({"mul-unit", [=](const E& a, const E&, const E&) {
                          return eq(mul(a, one), a);
                        }});
      axioms.push_back({"mul-zero", [=](const E& a, const E&, const E&) {
                          return eq(mul(a, zero), zero);
                        }});
      axioms.push_back({"mul-distributes-add", [=](const E& a, const E& b, const E& x) {
                          return eq(mul(add(a, b), x), add(mul(a, x), mul(b, x)));
                        }});
      axioms.push_back({"mul-distributes-dis", [=](const E& a, const E& b, const E& x) {
                          return eq(mul(dd(a, b), x), dd(mul(a, x), mul(b, x)));
                        }});
    }
  }

  if (cl.dis_associative) {
    axioms.push_back({"dis-assoc", [=](const E& a, const E& b, const E& x) {
                        return eq(dd(dd(a, b), x), dd(a, dd(b, x)));
                      }});
  }

  std::vector<E> pool = detail::sample_pool(inst, sample_budget, seed, report.exhaustive);
  std::vector<std::array<E, 3>> tuples;
  if (report.exhaustive) {
    for (const E& a : pool)
      for (const E& b : pool)
        for (const E& x : pool) tuples.push_back({a, b, x});
  } else {
    std::mt19937_64 rng(seed ^ 0xabcdef);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < sample_budget; ++i)
      tuples.push_back({pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]});
  }
  report.tuples_checked = tuples.size();

  for (const Axiom& ax : axioms) {
    AxiomResult res;
    res.name = ax.name;
    for (const auto& t : tuples) {
      if (!ax.pred(t[0], t[1], t[2])) {
        res.holds = false;
        res.witness = "(" + inst.show(t[0]) + ", " + inst.show(t[1]) + ", " +
                      inst.show(t[2]) + ")";
        res.witness_reconfirmed = !ax.pred(t[0], t[1], t[2]);
        break;
      }
    }
    report.axioms.push_back(std::move(res));
  }
  return report;
}

/// The default carrier: exact nonnegative dyadics.
struct DyadicInstance {
  using Elem = Dyadic;
  std::string name() const { return "dyadic"; }
  Claims claims() const { return {.halved = true, .unital = true, .totally_ordered = true}; }
  Elem zero() const { return Dyadic(); }
  Elem one() const { return Dyadic(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem dis(const Elem& a, const Elem& b) const { return ury::dis(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem halve(const Elem& a) const { return a.half(); }
  bool less(const Elem& a, const Elem& b) const { return a < b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string show(const Elem& a) const { return a.str(); }
  Elem sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<unsigned long> mant(0, 4095);
    std::uniform_int_distribution<std::uint32_t> exp(0, 8);
    return Dyadic(mpz_class(mant(rng)), exp(rng));
  }
};

/// Nonnegative rationals, the cross-check carrier.
struct RationalInstance {
  using Elem = mpq_class;
  std::string name() const { return "rational"; }
  Claims claims() const { return {.halved = true, .unital = true, .totally_ordered = true}; }
  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem dis(const Elem& a, const Elem& b) const { return abs(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem halve(const Elem& a) const { return a / 2; }
  bool less(const Elem& a, const Elem& b) const { return a < b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string show(const Elem& a) const { return a.get_str(); }
  Elem sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<unsigned long> num(0, 1 << 16);
    std::uniform_int_distribution<unsigned long> den(1, 1 << 10);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
  }
};

/// Two-element Boolean lattice viewed as an associative disring:
/// + and dis are both logical equivalence, 0 is top, mul is disjunction,
/// 1 is bottom.
struct BoolLatticeInstance {
  using Elem = bool;  // false = bottom, true = top
  std::string name() const { return "boolean"; }
  Claims claims() const { return {.unital = true, .dis_associative = true}; }
  Elem zero() const { return true; }
  Elem one() const { return false; }
  Elem add(Elem a, Elem b) const { return a == b; }
  Elem dis(Elem a, Elem b) const { return a == b; }
  Elem mul(Elem a, Elem b) const { return a || b; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string show(Elem a) const { return a ? "top" : "bottom"; }
  std::vector<Elem> carrier() const { return {false, true}; }
  Elem sample(std::mt19937_64& rng) const { return (rng() & 1) != 0; }
};

/// The group of order 2: every element is its own inverse, dis is the
/// group addition.
struct XorGroupInstance {
  using Elem = bool;
  std::string name() const { return "z2"; }
  Claims claims() const { return {.dis_associative = true}; }
  Elem zero() const { return false; }
  Elem add(Elem a, Elem b) const { return a != b; }
  Elem dis(Elem a, Elem b) const { return a != b; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string show(Elem a) const { return a ? "1" : "0"; }
  std::vector<Elem> carrier() const { return {false, true}; }
  Elem sample(std::mt19937_64& rng) const { return (rng() & 1) != 0; }
};

/// Deliberately broken: dis(a, b) := a + b on the dyadics. The axiom suite
/// must fail on it with a witness (dis(1, 1) = 2 != 0).
struct BrokenDisInstance {
  using Elem = Dyadic;
  std::string name() const { return "broken"; }
  Claims claims() const { return {.halved = true, .unital = true, .totally_ordered = true}; }
  Elem zero() const { return Dyadic(); }
  Elem one() const { return Dyadic(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem dis(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem halve(const Elem& a) const { return a.half(); }
  bool less(const Elem& a, const Elem& b) const { return a < b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string show(const Elem& a) const { return a.str(); }
  Elem sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<unsigned long> mant(0, 255);
    std::uniform_int_distribution<std::uint32_t> exp(0, 4);
    return Dyadic(mpz_class(mant(rng)), exp(rng));
  }
};

std::vector<std::string> instance_names();

/// Runs check_axioms on the named instance; throws Error("unknown-instance")
/// for names outside instance_names().
AxiomReport check_instance(const std::string& name, std::size_t budget,
                           std::uint64_t seed = 0x75ca1ab1eULL);

}  // namespace ury::disring
