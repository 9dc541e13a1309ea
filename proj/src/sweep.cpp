#include "mks/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace mks {

std::vector<Fraction> sweep_tangles(long max_den) {
  std::vector<Fraction> out;
  for (long q = 2; q <= max_den; ++q) {
    for (long p = -(2 * q - 1); p <= 2 * q - 1; ++p) {
      if (p == 0) continue;
      if (gcd(mpz_class(p), mpz_class(q)) != 1) continue;
      out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TangleList> sweep_knots(const SweepParams& p) {
  if (p.n < 3) throw std::invalid_argument("sweep: n must be >= 3");
  std::vector<Fraction> domain = sweep_tangles(p.max_den);
  std::vector<TangleList> knots;
  std::vector<std::size_t> idx(static_cast<std::size_t>(p.n), 0);
  for (;;) {
    TangleList t;
    t.tangles.reserve(idx.size());
    for (std::size_t i : idx) t.tangles.push_back(domain[i]);
    if (is_knot(t)) knots.push_back(std::move(t));

    // Odometer; canonical mode keeps indices non-decreasing (combinations
    // with repetition), deduplicating permutation-equivalent knots.
    std::size_t d = idx.size();
    for (;;) {
      if (d == 0) return knots;
      --d;
      if (++idx[d] < domain.size()) break;
    }
    std::size_t reset = p.canonicalize ? idx[d] : 0;
    for (std::size_t i = d + 1; i < idx.size(); ++i) idx[i] = reset;
  }
}

namespace {

struct PerKnot {
  std::uint64_t candidates = 0;
  std::uint64_t simplified = 0;
  std::uint64_t exceptional_candidates = 0;
  std::uint64_t inconsistent_candidates = 0;
  bool exceptional = false;
  bool corollary_note = false;
  std::vector<std::string> violations;
  std::vector<std::string> internal_errors;
};

PerKnot summarize(const TangleList& knot, const BoundReport& rep) {
  PerKnot s;
  s.candidates = rep.total_candidates;
  s.simplified = rep.simplified.size();
  s.exceptional_candidates = rep.exceptional_candidates;
  s.inconsistent_candidates = rep.inconsistent_candidates;
  s.exceptional = rep.exception.has_value();
  for (const std::string& n : rep.notes)
    if (n.find("corollary") != std::string::npos) s.corollary_note = true;
  for (const std::string& v : rep.violations) s.violations.push_back(knot.str() + ": " + v);
  return s;
}

}  // namespace

SweepResult run_sweep(const SweepParams& p, const std::function<void(const BoundReport&)>& hook) {
  std::vector<TangleList> knots = sweep_knots(p);
  std::vector<PerKnot> results(knots.size());

  std::atomic<std::size_t> next{0};
  std::mutex hook_mu;
  // Reorder buffer: hook observes reports in enumeration order regardless of
  // worker scheduling. Null entries mark knots whose report threw.
  std::map<std::size_t, std::unique_ptr<BoundReport>> pending;
  std::size_t drain_pos = 0;

  auto deliver = [&](std::size_t i, std::unique_ptr<BoundReport> rep) {
    std::lock_guard<std::mutex> lk(hook_mu);
    pending.emplace(i, std::move(rep));
    while (!pending.empty() && pending.begin()->first == drain_pos) {
      if (pending.begin()->second) hook(*pending.begin()->second);
      pending.erase(pending.begin());
      ++drain_pos;
    }
  };

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= knots.size()) return;
      std::unique_ptr<BoundReport> rep;
      try {
        rep = std::make_unique<BoundReport>(report(knots[i]));
        results[i] = summarize(knots[i], *rep);
      } catch (const std::exception& e) {
        rep.reset();
        results[i].internal_errors.push_back(knots[i].str() + ": " + e.what());
      }
      if (hook) deliver(i, std::move(rep));
    }
  };

  int jobs = std::max(1, p.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  SweepResult out;
  out.knots = knots.size();
  for (const PerKnot& s : results) {
    out.candidates += s.candidates;
    out.simplified += s.simplified;
    out.exceptional_candidates += s.exceptional_candidates;
    out.inconsistent_candidates += s.inconsistent_candidates;
    if (s.exceptional) ++out.exceptional_knots;
    if (s.corollary_note) ++out.corollary_note_knots;
    out.violations.insert(out.violations.end(), s.violations.begin(), s.violations.end());
    out.internal_errors.insert(out.internal_errors.end(), s.internal_errors.begin(),
                               s.internal_errors.end());
  }
  return out;
}

}  // namespace mks
