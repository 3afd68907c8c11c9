#include "sumsym/oracle.hpp"

#include "sumsym/errors.hpp"

#include <optional>

namespace sumsym {

Integer feasible_count(const Scenario& sc) {
  mpz_class count;
  mpz_fac_ui(count.get_mpz_t(), sc.items.size());
  for (const auto& t : sc.treatments) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), t.quota);
    count /= f;
  }
  return Integer(count);
}

namespace {

void check_caps(const Scenario& sc, const OracleCaps& caps) {
  if (sc.items.size() > caps.max_items) {
    throw CapExceeded("scenario has " + std::to_string(sc.items.size()) +
                      " items; exhaustive search is capped at " + std::to_string(caps.max_items));
  }
  const Integer count = feasible_count(sc);
  if (count > Integer(caps.max_allocations)) {
    throw CapExceeded("scenario has " + count.str() + " feasible allocations; exhaustive search is capped at " +
                      std::to_string(caps.max_allocations));
  }
}

class FeasibleWalker {
 public:
  FeasibleWalker(const Scenario& sc, const std::function<void(const Allocation&)>& visit)
      : sc_(sc), visit_(visit), classes_(sc.items.size()) {
    for (const auto& t : sc.treatments) remaining_.push_back(t.quota);
  }

  void run(std::size_t x = 0) {
    if (x == classes_.size()) {
      visit_(make_allocation(sc_, classes_));
      return;
    }
    for (std::size_t c = 0; c < remaining_.size(); ++c) {
      if (remaining_[c] == 0) continue;
      --remaining_[c];
      classes_[x] = c;
      run(x + 1);
      ++remaining_[c];
    }
  }

 private:
  const Scenario& sc_;
  const std::function<void(const Allocation&)>& visit_;
  std::vector<std::size_t> classes_;
  std::vector<std::size_t> remaining_;
};

bool is_feasible_for(const Allocation& a, const Scenario& sc) {
  if (a.classes.size() != sc.items.size()) return false;
  std::vector<std::size_t> sizes(sc.treatments.size(), 0);
  for (auto c : a.classes) {
    if (c >= sizes.size()) return false;
    ++sizes[c];
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] != sc.treatments[i].quota) return false;
  }
  return true;
}

}  // namespace

void enumerate_feasible(const Scenario& sc, const OracleCaps& caps,
                        const std::function<void(const Allocation&)>& visit) {
  validate(sc);
  check_caps(sc, caps);
  FeasibleWalker(sc, visit).run();
}

std::vector<Allocation> feasible_allocations(const Scenario& sc, const OracleCaps& caps) {
  std::vector<Allocation> out;
  enumerate_feasible(sc, caps, [&](const Allocation& a) { out.push_back(a); });
  return out;
}

BestScore brute_force_best(const Scenario& sc, const OracleCaps& caps) {
  std::optional<BestScore> best;
  enumerate_feasible(sc, caps, [&](const Allocation& a) {
    if (!best || a.score > best->max_score) best = BestScore{a.score, a};
  });
  // A validated scenario always has at least one feasible allocation.
  return std::move(*best);
}

SquareMatrix<Integer> overlap_matrix(const Allocation& p, const Allocation& q, const Scenario& sc) {
  if (!is_feasible_for(p, sc) || !is_feasible_for(q, sc)) {
    throw InvalidArgument("overlap_matrix: both allocations must be feasible for the given scenario");
  }
  SquareMatrix<Integer> m(sc.treatments.size());
  for (std::size_t x = 0; x < sc.items.size(); ++x) m(p.classes[x], q.classes[x]) += Integer(1);
  return m;
}

bool check_rearrangement(std::span<const Rational> s, std::span<const Rational> u,
                         std::span<const std::size_t> sigma) {
  if (s.size() != u.size() || s.size() != sigma.size()) {
    throw InvalidArgument("check_rearrangement: s, u and sigma must have equal lengths");
  }
  std::vector<bool> hit(sigma.size(), false);
  for (auto image : sigma) {
    if (image >= sigma.size() || hit[image]) throw InvalidArgument("check_rearrangement: sigma is not a permutation");
    hit[image] = true;
  }
  Rational aligned;
  Rational permuted;
  for (std::size_t j = 0; j < s.size(); ++j) {
    aligned += s[j] * u[j];
    permuted += s[sigma[j]] * u[j];
  }
  return aligned >= permuted;
}

}  // namespace sumsym
