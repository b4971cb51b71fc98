#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "law.hpp"
#include "models.hpp"

namespace flexmeadow {

// ---------------------------------------------------------------------------
// Strategies and reports
// ---------------------------------------------------------------------------

struct RandomStrategy {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};
struct ExhaustiveStrategy {};
using Strategy = std::variant<RandomStrategy, ExhaustiveStrategy>;

struct Counterexample {
  std::vector<std::pair<std::string, std::string>> bindings;  // var -> literal
  std::string lhs, rhs;  // printed values of the failing equation's sides
};

enum class Status { Pass, Fail, Error };

struct Report {
  std::string law_id;
  std::string catalog;
  Status status = Status::Pass;
  std::uint64_t samples = 0;    // assignments attempted
  std::uint64_t effective = 0;  // assignments that satisfied the guard
  std::optional<Counterexample> ce;
  std::string error_message;
};

/// A Pass under random sampling is only meaningful if enough samples got
/// past the guard; below this floor the verdict becomes Error instead.
inline std::uint64_t effective_floor(std::uint64_t samples) {
  return samples < 100 ? samples : 100;
}

// ---------------------------------------------------------------------------
// Single-assignment evaluation
// ---------------------------------------------------------------------------

namespace detail {

template <meadow_carrier M>
using Env = std::map<std::string, typename M::value_type>;

template <meadow_carrier M>
bool guard_holds(const M& m, const Guard& g, const Env<M>& env) {
  switch (g.kind) {
    case Guard::Kind::None:
      return true;
    case Guard::Kind::Zeroless: {
      const auto& x = env.at(g.var);
      return !m.eq(x, m.nfun(x));
    }
    case Guard::Kind::Nonzero:
      return !m.eq(env.at(g.var), m.zero());
    case Guard::Kind::TermEq:
      return m.eq(eval_term(m, g.lhs, env), eval_term(m, g.rhs, env));
  }
  return true;
}

template <meadow_carrier M>
void fill_bindings(const M& m, const Law& law, const Env<M>& env,
                   Counterexample& ce) {
  for (const std::string& v : law.vars)
    ce.bindings.emplace_back(v, m.print(env.at(v)));
}

enum class SampleResult { Pass, Fail, Skip };

template <meadow_carrier M>
SampleResult eval_assignment(const M& m, const Law& law, const Env<M>& env,
                             Counterexample& ce) {
  if (!guard_holds(m, law.guard, env)) return SampleResult::Skip;
  switch (law.kind) {
    case Law::Kind::Identity:
    case Law::Kind::Conditional: {
      auto l = eval_term(m, law.lhs, env);
      auto r = eval_term(m, law.rhs, env);
      if (m.eq(l, r)) return SampleResult::Pass;
      fill_bindings(m, law, env, ce);
      ce.lhs = m.print(l);
      ce.rhs = m.print(r);
      return SampleResult::Fail;
    }
    case Law::Kind::Disjunction: {
      for (const auto& [lt, rt] : law.disjuncts)
        if (m.eq(eval_term(m, lt, env), eval_term(m, rt, env)))
          return SampleResult::Pass;
      fill_bindings(m, law, env, ce);
      const auto& [lt, rt] = law.disjuncts.front();
      ce.lhs = m.print(eval_term(m, lt, env));
      ce.rhs = m.print(eval_term(m, rt, env));
      return SampleResult::Fail;
    }
    case Law::Kind::Builtin: {
      const auto& x = env.at("x");
      bool ok;
      if constexpr (std::is_same_v<typename M::value_type, ExtNum>) {
        ok = check_fil(x);
      } else {
        auto z = m.mul(x, m.inv(x));
        ok = m.eq(z, m.add(m.one(), m.nfun(z))) && !m.eq(z, m.nfun(z));
      }
      if (ok) return SampleResult::Pass;
      fill_bindings(m, law, env, ce);
      auto z = m.mul(x, m.inv(x));
      ce.lhs = m.print(z);
      ce.rhs = m.print(m.add(m.one(), m.nfun(z)));
      return SampleResult::Fail;
    }
  }
  return SampleResult::Pass;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// check: drive a law over random or exhaustive assignments
// ---------------------------------------------------------------------------

template <meadow_carrier M>
Report check(const M& m, const Law& law, const RandomStrategy& st) {
  Report rep;
  rep.law_id = law.id;
  rep.catalog = law.catalog;
  try {
    for (std::uint64_t index = 0; index < st.samples; ++index) {
      detail::Env<M> env;
      for (std::size_t slot = 0; slot < law.vars.size(); ++slot)
        env.emplace(law.vars[slot], m.sample(st.seed, index, slot));
      ++rep.samples;
      Counterexample ce;
      switch (detail::eval_assignment(m, law, env, ce)) {
        case detail::SampleResult::Skip:
          break;
        case detail::SampleResult::Pass:
          ++rep.effective;
          break;
        case detail::SampleResult::Fail:
          ++rep.effective;
          rep.status = Status::Fail;
          rep.ce = std::move(ce);
          return rep;
      }
    }
    if (rep.effective < effective_floor(st.samples)) {
      rep.status = Status::Error;
      rep.error_message =
          "insufficient effective samples (" + std::to_string(rep.effective) +
          " of " + std::to_string(rep.samples) + ")";
    }
  } catch (const Error& e) {
    rep.status = Status::Error;
    rep.error_message = e.what();
  }
  return rep;
}

template <meadow_carrier M>
Report check(const M& m, const Law& law, const ExhaustiveStrategy&) {
  Report rep;
  rep.law_id = law.id;
  rep.catalog = law.catalog;
  if constexpr (!has_enumerate<M>) {
    rep.status = Status::Error;
    rep.error_message =
        "model '" + m.name() + "' does not support exhaustive checking";
    return rep;
  } else {
    const auto values = m.enumerate();
    const std::size_t k = law.vars.size();
    try {
      std::vector<std::size_t> odo(k, 0);
      for (;;) {
        detail::Env<M> env;
        for (std::size_t slot = 0; slot < k; ++slot)
          env.emplace(law.vars[slot], values[odo[slot]]);
        ++rep.samples;
        Counterexample ce;
        switch (detail::eval_assignment(m, law, env, ce)) {
          case detail::SampleResult::Skip:
            break;
          case detail::SampleResult::Pass:
            ++rep.effective;
            break;
          case detail::SampleResult::Fail:
            ++rep.effective;
            rep.status = Status::Fail;
            rep.ce = std::move(ce);
            return rep;
        }
        // Advance the odometer, rightmost variable fastest.
        std::size_t slot = k;
        while (slot > 0) {
          --slot;
          if (++odo[slot] < values.size()) break;
          odo[slot] = 0;
          if (slot == 0) return rep;
        }
        if (k == 0) return rep;
      }
    } catch (const Error& e) {
      rep.status = Status::Error;
      rep.error_message = e.what();
    }
    return rep;
  }
}

template <meadow_carrier M>
Report check(const M& m, const Law& law, const Strategy& st) {
  return std::visit([&](const auto& s) { return check(m, law, s); }, st);
}

/// Checks every law in declaration order.
template <meadow_carrier M>
std::vector<Report> check_suite(const M& m, const std::vector<Law>& laws,
                                const Strategy& st) {
  std::vector<Report> out;
  out.reserve(laws.size());
  for (const Law& law : laws) out.push_back(check(m, law, st));
  return out;
}

}  // namespace flexmeadow
