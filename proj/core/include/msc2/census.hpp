#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "msc2/iso.hpp"

namespace msc2 {

struct CensusOptions {
  int workers = 1;
  int max_ext = 2;                       // 1 disables the quadratic-extension pass
  bool commutative = false;              // restrict to commutative members
  std::uint64_t sample_target = 200000;  // deterministic sample size for 5 < q <= 9
};

struct CensusMatch {
  std::string entry;
  std::string params;  // comma-joined, printed over the matching field
  int ext_degree = 1;
};

struct CensusOrbit {
  std::uint64_t rep_code = 0;
  std::string rep;
  std::uint64_t size = 0;
  bool trivial = false;
  std::vector<CensusMatch> matches;
};

struct CensusCollision {
  std::size_t orbit = 0;
  std::vector<std::string> identities;  // distinct "entry(params)" on one orbit
};

struct CensusReport {
  std::string field;
  std::string ext_field;  // empty when the quadratic pass is off or unavailable
  bool commutative = false;
  bool sampled = false;
  std::uint64_t total = 0;         // candidates scanned
  std::uint64_t member_count = 0;  // filtered members, trivial included
  std::uint64_t pa_count = 0;      // power-associative members
  std::uint64_t sweep_base = 0;
  std::uint64_t sweep_ext = 0;
  std::vector<CensusOrbit> orbits;  // empty in sampled mode
  std::vector<std::size_t> unmatched;
  std::vector<CensusCollision> collisions;
};

namespace detail {

template <Field F>
bool census_member(const F& f, const Msc<F>& a, bool commutative_only) {
  if (commutative_only && !is_commutative(f, a)) return false;
  return is_jordan(f, a);
}

template <Field F>
void parallel_codes(const F& f, std::uint64_t total, int workers,
                    std::vector<std::uint64_t>& out,
                    bool commutative_only) {
  int n = workers < 1 ? 1 : workers;
  if (n == 1 || total < 4096) {
    for (std::uint64_t c = 0; c < total; ++c)
      if (census_member(f, msc_from_code(f, c), commutative_only)) out.push_back(c);
    return;
  }
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  for (int w = 0; w < n; ++w)
    pool.emplace_back([&, w] {
      std::uint64_t lo = total * static_cast<std::uint64_t>(w) / n;
      std::uint64_t hi = total * (static_cast<std::uint64_t>(w) + 1) / n;
      for (std::uint64_t c = lo; c < hi; ++c)
        if (census_member(f, msc_from_code(f, c), commutative_only))
          parts[static_cast<std::size_t>(w)].push_back(c);
    });
  for (auto& t : pool) t.join();
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
}

}  // namespace detail

// All MSC codes over GF(q), q <= 5, whose 12 residuals vanish, ascending
// (first matrix entry most significant). The trivial zero MSC is included.
template <Field F>
std::vector<std::uint64_t> enumerate_jordan(const F& f, int workers = 1,
                                            bool commutative_only = false) {
  if (!f.finite()) throw error("census needs a finite field");
  if (f.size() > 5) throw error("census budget exceeded: full enumeration needs q <= 5");
  std::uint64_t q = f.size(), total = 1;
  for (int i = 0; i < 8; ++i) total *= q;
  std::vector<std::uint64_t> out;
  detail::parallel_codes(f, total, workers, out, commutative_only);
  return out;
}

// Partition an action-closed code list into GL(2,q)-orbits; each orbit sorted
// ascending, orbits ordered by least member, which is the representative.
template <Field F>
std::vector<std::vector<std::uint64_t>> partition_orbits(
    const F& f, const std::vector<std::uint64_t>& members) {
  std::unordered_set<std::uint64_t> pending(members.begin(), members.end());
  std::vector<std::uint64_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t q = f.size(), total = q * q * q * q;
  std::vector<std::vector<std::uint64_t>> orbits;
  for (std::uint64_t rep : sorted) {
    if (!pending.count(rep)) continue;
    Msc<F> A = msc_from_code(f, rep);
    std::unordered_set<std::uint64_t> orb;
    for (std::uint64_t i = 0; i < total; ++i) {
      Mat2<F> g = mat_from_index(f, i);
      if (f.is_zero(det2(f, g))) continue;
      orb.insert(msc_code(f, basis_change(f, A, g)));
    }
    std::vector<std::uint64_t> sorted_orb(orb.begin(), orb.end());
    std::sort(sorted_orb.begin(), sorted_orb.end());
    for (std::uint64_t c : sorted_orb) {
      if (!pending.erase(c)) throw error("orbit escapes the filtered set");
    }
    orbits.push_back(std::move(sorted_orb));
  }
  return orbits;
}

namespace detail {

inline std::string join_params(const std::vector<std::string>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += ps[i];
  }
  return out;
}

template <Field F>
std::vector<std::pair<std::string, std::string>> sweep_identities(
    const F& f, Group g, std::vector<std::uint64_t>& codes) {
  std::vector<std::pair<std::string, std::string>> ids;
  for (const auto& inst : sweep(f, g)) {
    std::vector<std::string> ps;
    for (const auto& p : inst.params) ps.push_back(f.str(p));
    ids.emplace_back(inst.entry->id, join_params(ps));
    codes.push_back(msc_code(f, inst.msc));
  }
  return ids;
}

}  // namespace detail

// Full census driver. Full scan with orbit partition and catalog coverage for
// q <= 5; a deterministic strided sample (counts only) for 5 < q <= 9.
template <Field F>
CensusReport census(const F& f, const CensusOptions& opts = {}) {
  if (!f.finite()) throw error("census needs a finite field");
  std::uint64_t q = f.size();
  if (q > 9) throw error("census budget exceeded: q <= 9");
  CensusReport r;
  r.field = f.desc_str();
  r.commutative = opts.commutative;
  Group grp = opts.commutative ? Group::CommutativeClosed : Group::JordanClosed;

  if (q > 5) {
    r.sampled = true;
    std::uint64_t space = 1;
    for (int i = 0; i < 8; ++i) space *= q;
    std::uint64_t n = opts.sample_target < space ? opts.sample_target : space;
    std::uint64_t step = space / n;
    for (std::uint64_t k = 0; k < n; ++k) {
      Msc<F> a = msc_from_code(f, k * step);
      if (!detail::census_member(f, a, opts.commutative)) continue;
      ++r.member_count;
      if (is_power_associative(f, a)) ++r.pa_count;
    }
    r.total = n;
    return r;
  }

  std::vector<std::uint64_t> members = enumerate_jordan(f, opts.workers, opts.commutative);
  r.total = 1;
  for (int i = 0; i < 8; ++i) r.total *= q;
  r.member_count = members.size();
  for (std::uint64_t c : members)
    if (is_power_associative(f, msc_from_code(f, c))) ++r.pa_count;

  auto orbits = partition_orbits(f, members);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (std::uint64_t c : orbits[k]) index.emplace(c, k);

  r.orbits.resize(orbits.size());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    r.orbits[k].rep_code = orbits[k].front();
    r.orbits[k].rep = msc_str(f, msc_from_code(f, orbits[k].front()));
    r.orbits[k].size = orbits[k].size();
    r.orbits[k].trivial = orbits[k].front() == 0;
  }

  std::vector<std::uint64_t> base_codes;
  auto base_ids = detail::sweep_identities(f, grp, base_codes);
  r.sweep_base = base_ids.size();
  for (std::size_t i = 0; i < base_ids.size(); ++i) {
    auto it = index.find(base_codes[i]);
    if (it == index.end()) continue;
    r.orbits[it->second].matches.push_back({base_ids[i].first, base_ids[i].second, 1});
  }

  // Quadratic-extension pass: other table members may only become isomorphic
  // to an orbit after lifting, so expand every nontrivial orbit over GF(q^2)
  // and look the extension sweep up in the expanded sets.
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (opts.max_ext >= 2) {
      PrimeQuadField ext(static_cast<long>(f.characteristic()));
      r.ext_field = ext.desc_str();
      std::vector<std::size_t> reps;
      for (std::size_t k = 0; k < orbits.size(); ++k)
        if (orbits[k].front() != 0) reps.push_back(k);
      std::vector<std::unordered_set<std::uint64_t>> lifted(orbits.size());
      int n = opts.workers < 1 ? 1 : opts.workers;
      std::atomic<std::size_t> next{0};
      auto expand = [&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= reps.size()) return;
          std::size_t k = reps[i];
          Msc<F> a = msc_from_code(f, orbits[k].front());
          Msc<PrimeQuadField> al = msc_zero(ext);
          for (int j = 0; j < 8; ++j) al[j] = lift(f, ext, a[j]);
          std::uint64_t eq = ext.size(), etotal = eq * eq * eq * eq;
          for (std::uint64_t gi = 0; gi < etotal; ++gi) {
            Mat2<PrimeQuadField> g = mat_from_index(ext, gi);
            if (ext.is_zero(det2(ext, g))) continue;
            lifted[k].insert(msc_code(ext, basis_change(ext, al, g)));
          }
        }
      };
      if (n == 1) {
        expand();
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n; ++w) pool.emplace_back(expand);
        for (auto& t : pool) t.join();
      }
      std::vector<std::uint64_t> ext_codes;
      auto ext_ids = detail::sweep_identities(ext, grp, ext_codes);
      r.sweep_ext = ext_ids.size();
      for (std::size_t i = 0; i < ext_ids.size(); ++i) {
        for (std::size_t k : reps) {
          if (!lifted[k].count(ext_codes[i])) continue;
          bool dup = false;
          for (const auto& m : r.orbits[k].matches)
            if (m.entry == ext_ids[i].first && m.params == ext_ids[i].second) dup = true;
          if (!dup)
            r.orbits[k].matches.push_back({ext_ids[i].first, ext_ids[i].second, 2});
        }
      }
    }
  }

  for (std::size_t k = 0; k < r.orbits.size(); ++k) {
    if (!r.orbits[k].trivial && r.orbits[k].matches.empty()) r.unmatched.push_back(k);
    std::vector<std::string> ids;
    for (const auto& m : r.orbits[k].matches) {
      std::string id = m.entry + "(" + m.params + ")";
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    if (ids.size() > 1) {
      std::sort(ids.begin(), ids.end());
      r.collisions.push_back({k, ids});
    }
  }
  return r;
}

}  // namespace msc2
