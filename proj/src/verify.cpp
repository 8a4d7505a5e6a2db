#include "kummer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "kummer/carries.hpp"
#include "kummer/digits.hpp"
#include "kummer/error.hpp"
#include "kummer/kernels.hpp"
#include "kummer/primes.hpp"
#include "kummer/render.hpp"
#include "kummer/triangle.hpp"
#include "kummer/valuation.hpp"

namespace kummer {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;
constexpr std::uint64_t kRandomCases = 10'000;
constexpr natural kDigitBaseLo = 2;
constexpr natural kDigitBaseHi = 16;
const std::vector<natural> kCompositeModuli{2, 3, 4, 5, 6, 7, 8, 9, 12};
const std::vector<natural> kCompositeOnly{4, 6, 8, 9, 12};

std::uint64_t triangle_count(std::uint64_t top) { return (top + 1) * (top + 2) / 2; } // 0 <= i <= n <= top

std::string tuple(std::initializer_list<std::pair<const char*, natural>> fields)
{
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : fields) {
    if (!first) out += ", ";
    first = false;
    out += k;
    out += "=";
    out += std::to_string(v);
  }
  return out + ")";
}

std::string join(const std::vector<natural>& values)
{
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k != 0) out += ",";
    out += std::to_string(values[k]);
  }
  return out;
}

// Runs cases for one property, converting false results and exceptions into
// recorded counterexamples.
class Sweep {
public:
  explicit Sweep(PropertyResult& result) : result_(result) {}

  template <typename Check, typename Label>
  void run(Check&& check, Label&& label)
  {
    ++result_.cases;
    try {
      if (!check()) fail(label());
    } catch (const std::exception& e) {
      fail(label() + ": " + e.what());
    }
  }

  void fail(std::string what)
  {
    ++result_.failure_count;
    if (result_.failures.size() < kMaxRecordedFailures) result_.failures.push_back(std::move(what));
  }

private:
  PropertyResult& result_;
};

using PropertyFn = std::function<void(PropertyResult&)>;

struct Property {
  std::string name;
  std::string sweep;
  std::uint64_t declared;
  PropertyFn body;
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t salt)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// ---------------------------------------------------------------- digits

void add_digit_properties(std::vector<Property>& props, const VerifyOptions& o)
{
  const natural N = o.max_n;
  const std::uint64_t grid = (N + 1) * (kDigitBaseHi - kDigitBaseLo + 1);
  const std::string grid_desc = "n in [0," + std::to_string(N) + "], b in [2,16]";

  props.push_back({"digits.round_trip", "10000 random n < 2^63, b in [2,1000]", kRandomCases, [o](PropertyResult& r) {
                     Sweep sweep(r);
                     std::mt19937_64 rng(stream_seed(o.seed, 1));
                     std::uniform_int_distribution<natural> n_dist(0, (natural{1} << 63) - 1);
                     std::uniform_int_distribution<natural> b_dist(2, 1000);
                     for (std::uint64_t c = 0; c < kRandomCases; ++c) {
                       const natural n = n_dist(rng);
                       const natural b = b_dist(rng);
                       sweep.run([&] { return from_digits(to_digits(n, b)) == n; },
                                 [&] { return tuple({{"n", n}, {"b", b}}); });
                     }
                   }});

  props.push_back({"digits.floor_formula", grid_desc + ", k up to len+2", grid, [N](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural n = 0; n <= N; ++n) {
                       for (natural b = kDigitBaseLo; b <= kDigitBaseHi; ++b) {
                         sweep.run(
                           [&] {
                             const DigitVector d = to_digits(n, b);
                             for (std::size_t k = 0; k < d.size() + 3; ++k) {
                               const natural listed = k < d.size() ? d.digits()[k] : 0;
                               if (digit_at(n, b, k) != listed) return false;
                             }
                             return true;
                           },
                           [&] { return tuple({{"n", n}, {"b", b}}); });
                       }
                     }
                   }});

  props.push_back({"digits.digit_sum_congruence", grid_desc, grid, [N](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural n = 0; n <= N; ++n) {
                       for (natural b = kDigitBaseLo; b <= kDigitBaseHi; ++b) {
                         sweep.run([&] { return digit_sum(n, b) % (b - 1) == n % (b - 1); },
                                   [&] { return tuple({{"n", n}, {"b", b}}); });
                       }
                     }
                   }});

  props.push_back({"digits.canonical", grid_desc, grid, [N](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural n = 0; n <= N; ++n) {
                       for (natural b = kDigitBaseLo; b <= kDigitBaseHi; ++b) {
                         sweep.run(
                           [&] {
                             const DigitVector d = to_digits(n, b);
                             if (n == 0) return d.is_zero();
                             return d.digits().back() != 0 &&
                                    std::all_of(d.digits().begin(), d.digits().end(), [&](natural x) { return x < b; });
                           },
                           [&] { return tuple({{"n", n}, {"b", b}}); });
                       }
                     }
                   }});
}

// ---------------------------------------------------------------- carries

bool trace_consistent(const CarryTrace& t, natural i, natural j)
{
  bool carry = false;
  std::size_t runs = 0;
  bool in_run = false;
  natural carries = 0;
  for (const CarryColumn& col : t.columns) {
    if (col.carry_in != carry) return false;
    const natural lhs = col.i_digit + col.j_digit + (col.carry_in ? 1 : 0);
    const natural rhs_base = col.carry_out ? t.base : 0;
    if (lhs != col.n_digit + rhs_base) return false;
    if (col.stopping != (col.carry_in && !col.carry_out)) return false;
    if (col.carry_out && !in_run) ++runs;
    in_run = col.carry_out;
    carries += col.carry_out ? 1 : 0;
    carry = col.carry_out;
  }
  if (!t.columns.empty() && t.columns.back().carry_out) return false;
  if (carries != t.carry_count) return false;
  if (runs != stopping_places(t).size()) return false;
  return from_digits(t.sum_n) == i + j;
}

void add_carry_properties(std::vector<Property>& props, const VerifyOptions& o)
{
  const natural N = o.max_n;
  const std::string tri = "0 <= i <= n <= " + std::to_string(N);
  const natural special_top = std::min<natural>(N, 1024);

  props.push_back({"carries.digit_formula_equivalence", "10000 random i, j < 2^62, b in [2,1000]", kRandomCases,
                   [o](PropertyResult& r) {
                     Sweep sweep(r);
                     std::mt19937_64 rng(stream_seed(o.seed, 2));
                     std::uniform_int_distribution<natural> v(0, (natural{1} << 62) - 1);
                     std::uniform_int_distribution<natural> bd(2, 1000);
                     for (std::uint64_t c = 0; c < kRandomCases; ++c) {
                       const natural i = v(rng), j = v(rng), b = bd(rng);
                       sweep.run([&] { return carry_count_digit_formula(i, j, b) == add_with_trace(i, j, b).carry_count; },
                                 [&] { return tuple({{"i", i}, {"j", j}, {"b", b}}); });
                     }
                   }});

  props.push_back({"carries.digit_total_decrease", "10000 random i, j < 2^62, b in [2,1000]", kRandomCases,
                   [o](PropertyResult& r) {
                     Sweep sweep(r);
                     std::mt19937_64 rng(stream_seed(o.seed, 3));
                     std::uniform_int_distribution<natural> v(0, (natural{1} << 62) - 1);
                     std::uniform_int_distribution<natural> bd(2, 1000);
                     for (std::uint64_t c = 0; c < kRandomCases; ++c) {
                       const natural i = v(rng), j = v(rng), b = bd(rng);
                       sweep.run(
                         [&] {
                           const natural before = digit_sum(i, b) + digit_sum(j, b);
                           const natural after = digit_sum(i + j, b);
                           return before >= after && (before - after) % (b - 1) == 0;
                         },
                         [&] { return tuple({{"i", i}, {"j", j}, {"b", b}}); });
                     }
                   }});

  props.push_back({"carries.every_carry_stops", tri + ", b in primes", triangle_count(N) * o.primes.size(),
                   [N, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural b : primes) {
                       for (natural n = 0; n <= N; ++n) {
                         for (natural i = 0; i <= n; ++i) {
                           sweep.run([&] { return trace_consistent(add_with_trace(i, n - i, b), i, n - i); },
                                     [&] { return tuple({{"n", n}, {"i", i}, {"b", b}}); });
                         }
                       }
                     }
                   }});

  props.push_back({"carries.binary_stopping_digits", tri + ", b = 2", triangle_count(N), [N](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural n = 0; n <= N; ++n) {
                       for (natural i = 0; i <= n; ++i) {
                         sweep.run(
                           [&] {
                             const CarryTrace t = add_with_trace(i, n - i, 2);
                             for (std::size_t k : stopping_places(t)) {
                               const CarryColumn& c = t.columns[k];
                               if (c.i_digit != 0 || c.j_digit != 0 || c.n_digit != 1) return false;
                             }
                             return true;
                           },
                           [&] { return tuple({{"n", n}, {"i", i}}); });
                       }
                     }
                   }});

  props.push_back({"carries.special_equals_stopping", "0 <= i <= n <= " + std::to_string(special_top),
                   triangle_count(special_top), [special_top](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural n = 0; n <= special_top; ++n) {
                       for (natural i = 0; i <= n; ++i) {
                         sweep.run([&] { return special_places(n, i) == stopping_places(add_with_trace(i, n - i, 2)); },
                                   [&] { return tuple({{"n", n}, {"i", i}}); });
                       }
                     }
                   }});

  props.push_back({"carries.no_special_at_place0", "0 <= i <= n <= " + std::to_string(special_top),
                   triangle_count(special_top), [special_top](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural n = 0; n <= special_top; ++n) {
                       for (natural i = 0; i <= n; ++i) {
                         sweep.run(
                           [&] {
                             const auto places = special_places(n, i);
                             return std::find(places.begin(), places.end(), 0) == places.end();
                           },
                           [&] { return tuple({{"n", n}, {"i", i}}); });
                       }
                     }
                   }});
}

// ---------------------------------------------------------------- valuation

void add_valuation_properties(std::vector<Property>& props, const VerifyOptions& o)
{
  const natural N = o.max_n;
  const std::string tri = "0 <= i <= n <= " + std::to_string(N);
  const natural small_top = std::min<natural>(N, 20);
  const natural composite_top = std::min<natural>(N, 200);

  std::uint64_t all_primes_cases = 0;
  {
    std::uint64_t pi = 0;
    for (natural n = 0; n <= N; ++n) {
      if (is_prime(n)) ++pi;
      all_primes_cases += (n + 1) * pi;
    }
  }

  props.push_back({"valuation.triple_agreement", "n in [0," + std::to_string(N) + "], p in primes",
                   (N + 1) * o.primes.size(), [N, primes = o.primes, cap = o.oracle_cap](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       for (natural n = 0; n <= N; ++n) {
                         sweep.run(
                           [&] {
                             const natural brute = factorial_valuation_bruteforce(n, p, cap);
                             return brute == legendre_valuation(n, p) && brute == digit_sum_valuation(n, p);
                           },
                           [&] { return tuple({{"n", n}, {"p", p}}); });
                       }
                     }
                   }});

  props.push_back({"valuation.kummer_equivalence", tri + ", p in primes", triangle_count(N) * o.primes.size(),
                   [N, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       for (natural n = 0; n <= N; ++n) {
                         const natural vn = legendre_valuation(n, p);
                         for (natural i = 0; i <= n; ++i) {
                           sweep.run(
                             [&] {
                               const natural bottom = legendre_valuation(i, p) + legendre_valuation(n - i, p);
                               return bottom <= vn && kummer_valuation(n, i, p) == vn - bottom;
                             },
                             [&] { return tuple({{"n", n}, {"i", i}, {"p", p}}); });
                         }
                       }
                     }
                   }});

  props.push_back({"valuation.binomial_nonnegative", tri + ", every prime p <= n", all_primes_cases,
                   [N](PropertyResult& r) {
                     Sweep sweep(r);
                     const auto primes = primes_up_to(N);
                     for (natural n = 0; n <= N; ++n) {
                       for (natural p : primes) {
                         if (p > n) break;
                         const auto vn = static_cast<std::int64_t>(legendre_valuation(n, p));
                         for (natural i = 0; i <= n; ++i) {
                           sweep.run(
                             [&] {
                               return vn - static_cast<std::int64_t>(legendre_valuation(i, p)) -
                                        static_cast<std::int64_t>(legendre_valuation(n - i, p)) >=
                                      0;
                             },
                             [&] { return tuple({{"n", n}, {"i", i}, {"p", p}}); });
                         }
                       }
                     }
                   }});

  props.push_back({"valuation.small_case_exactness", "0 <= i <= n <= " + std::to_string(small_top),
                   triangle_count(small_top), [small_top, cap = o.oracle_cap](PropertyResult& r) {
                     Sweep sweep(r);
                     // Additive recurrence in plain integers; C(20, 10) = 184756 fits easily.
                     std::vector<natural> row{1};
                     for (natural n = 0; n <= small_top; ++n) {
                       for (natural i = 0; i <= n; ++i) {
                         sweep.run(
                           [&] {
                             natural product = 1;
                             for (const auto& [p, v] : valuation_table(n, i, cap).by_prime) {
                               for (natural t = 0; t < v.binomial; ++t) product = checked_mul(product, p);
                             }
                             return product == row[i];
                           },
                           [&] { return tuple({{"n", n}, {"i", i}}); });
                       }
                       std::vector<natural> next(row.size() + 1, 1);
                       for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
                       row = std::move(next);
                     }
                   }});

  props.push_back({"valuation.composite_divisibility",
                   "0 <= i <= n <= " + std::to_string(composite_top) + ", m in {2,3,4,5,6,7,8,9,12}",
                   triangle_count(composite_top) * kCompositeModuli.size(), [composite_top](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural m : kCompositeModuli) {
                       RowStream stream(m);
                       for (natural n = 0; n <= composite_top; ++n) {
                         const TriangleRow& row = stream.current();
                         for (natural i = 0; i <= n; ++i) {
                           sweep.run([&] { return binomial_divisible_by(n, i, m) == (row[i] == 0); },
                                     [&] { return tuple({{"n", n}, {"i", i}, {"m", m}}); });
                         }
                         stream.advance();
                       }
                     }
                   }});
}

// ---------------------------------------------------------------- triangle

std::string first_difference(const TriangleBitmap& a, const TriangleBitmap& b)
{
  for (std::size_t n = 0; n < std::min(a.rows(), b.rows()); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.at(n, i) != b.at(n, i)) return tuple({{"n", n}, {"i", i}});
    }
  }
  return "(row counts differ)";
}

void add_triangle_properties(std::vector<Property>& props, const VerifyOptions& o)
{
  const natural N = o.max_n;
  const natural R = o.rows;
  const std::string primes_desc = "p in {" + join(o.primes) + "}";

  props.push_back({"triangle.three_method_masks", primes_desc + ", R = " + std::to_string(R), o.primes.size(),
                   [R, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       std::string where;
                       sweep.run(
                         [&] {
                           const auto a = divisibility_mask(p, R, MaskMethod::recurrence);
                           const auto b = divisibility_mask(p, R, MaskMethod::kummer);
                           const auto c = divisibility_mask(p, R, MaskMethod::digit_domination);
                           if (!(a.cells == b.cells)) where = " recurrence/kummer at " + first_difference(a.cells, b.cells);
                           else if (!(a.cells == c.cells))
                             where = " recurrence/digit-domination at " + first_difference(a.cells, c.cells);
                           return where.empty();
                         },
                         [&] { return tuple({{"p", p}, {"R", R}}) + where; });
                     }
                   }});

  std::uint64_t self_similar_cases = 0;
  for (natural p : {2, 3}) {
    for (natural k : {1, 2}) {
      natural top = 1;
      for (natural t = 0; t <= k; ++t) top *= p;
      self_similar_cases += top * (top + 1) / 2;
    }
  }
  props.push_back({"triangle.self_similarity", "p in {2,3}, k in {1,2}, 0 <= i <= n < p^(k+1)", self_similar_cases,
                   [](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : {2, 3}) {
                       for (natural k : {1, 2}) {
                         natural pk = 1;
                         for (natural t = 0; t < k; ++t) pk *= p;
                         const natural top = pk * p;
                         const auto mask = divisibility_mask(p, top, MaskMethod::recurrence);
                         for (natural n = 0; n < top; ++n) {
                           for (natural i = 0; i <= n; ++i) {
                             sweep.run(
                               [&] {
                                 const natural nl = n % pk, il = i % pk;
                                 const bool low = il <= nl && mask.nonzero(nl, il);
                                 const natural nh = n / pk, ih = i / pk;
                                 const bool high = ih <= nh && mask.nonzero(nh, ih);
                                 return mask.nonzero(n, i) == (low && high);
                               },
                               [&] { return tuple({{"p", p}, {"k", k}, {"n", n}, {"i", i}}); });
                           }
                         }
                       }
                     }
                   }});

  props.push_back({"triangle.row_counts", "n in [0," + std::to_string(N) + "], " + primes_desc,
                   (N + 1) * o.primes.size(), [N, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       const auto mask = divisibility_mask(p, N + 1, MaskMethod::recurrence);
                       for (natural n = 0; n <= N; ++n) {
                         sweep.run(
                           [&] {
                             const auto row = mask.cells.row(n);
                             const auto count = static_cast<natural>(std::count(row.begin(), row.end(), 1));
                             return count == row_nonzero_count(n, p);
                           },
                           [&] { return tuple({{"n", n}, {"p", p}}); });
                       }
                     }
                   }});

  props.push_back({"triangle.cumulative_density", "p in {2,3,5}, k in [0,5]: cells in rows < p^k", 18,
                   [](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : {2, 3, 5}) {
                       natural rows = 1;
                       for (int k = 0; k < 5; ++k) rows *= p;
                       const auto mask = divisibility_mask(p, rows, MaskMethod::recurrence);
                       natural pk = 1, expected = 1;
                       for (natural k = 0; k <= 5; ++k) {
                         sweep.run(
                           [&] {
                             natural count = 0;
                             for (natural n = 0; n < pk; ++n) {
                               const auto row = mask.cells.row(n);
                               count += static_cast<natural>(std::count(row.begin(), row.end(), 1));
                             }
                             return count == expected;
                           },
                           [&] { return tuple({{"p", p}, {"k", k}, {"expected", expected}}); });
                         pk *= p;
                         expected *= p * (p + 1) / 2;
                       }
                     }
                   }});

  props.push_back({"triangle.prime_power_rows", primes_desc + ", R = " + std::to_string(R), o.primes.size(),
                   [R, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       sweep.run(
                         [&] {
                           if (R < 2) return true;
                           std::vector<natural> powers;
                           for (natural q = p; q < R; q *= p) powers.push_back(q);
                           return all_interior_divisible_rows(p, R) == powers;
                         },
                         [&] { return tuple({{"p", p}, {"R", R}}); });
                     }
                   }});

  std::vector<natural> moduli = o.primes;
  moduli.insert(moduli.end(), kCompositeOnly.begin(), kCompositeOnly.end());
  props.push_back({"triangle.row_invariants", "m in {" + join(moduli) + "}, rows < " + std::to_string(R),
                   moduli.size() * R, [R, moduli](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural m : moduli) {
                       RowStream stream(m);
                       for (natural n = 0; n < R; ++n) {
                         const TriangleRow& row = stream.current();
                         sweep.run(
                           [&] {
                             if (row.size() != n + 1 || row[0] != 1 || row[n] != 1) return false;
                             for (natural k = 0; k <= n; ++k) {
                               if (row[k] != row[n - k] || row[k] >= m) return false;
                             }
                             return true;
                           },
                           [&] { return tuple({{"m", m}, {"n", n}}); });
                         stream.advance();
                       }
                     }
                   }});

  props.push_back({"triangle.composite_mask_agreement", "m in {4,6,8,9,12}, R = " + std::to_string(R),
                   kCompositeOnly.size(), [R](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural m : kCompositeOnly) {
                       std::string where;
                       sweep.run(
                         [&] {
                           const auto a = recurrence_mask(m, R);
                           const auto b = factored_kummer_mask(m, R);
                           if (!(a.cells == b.cells)) where = " at " + first_difference(a.cells, b.cells);
                           return where.empty();
                         },
                         [&] { return tuple({{"m", m}, {"R", R}}) + where; });
                     }
                   }});
}

// ---------------------------------------------------------------- render

std::vector<std::size_t> black_per_row(const std::string& pbm)
{
  std::istringstream in(pbm);
  std::string magic;
  std::size_t w = 0, h = 0;
  in >> magic >> w >> h;
  std::vector<std::size_t> counts(h, 0);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      int bit = 0;
      in >> bit;
      counts[y] += bit == 1;
    }
  }
  return counts;
}

void add_render_properties(std::vector<Property>& props, const VerifyOptions& o)
{
  const natural R = o.rows;
  constexpr natural kStripeRows = 64;

  props.push_back({"render.stripe_union", "R = 64, places 1..6", triangle_count(kStripeRows - 1), [](PropertyResult& r) {
                     Sweep sweep(r);
                     const TriangleBitmap special = special_cell_union(kStripeRows);
                     const auto mask = divisibility_mask(2, kStripeRows, MaskMethod::recurrence);
                     for (natural n = 0; n < kStripeRows; ++n) {
                       for (natural i = 0; i <= n; ++i) {
                         sweep.run([&] { return special.at(n, i) == !mask.nonzero(n, i); },
                                   [&] { return tuple({{"n", n}, {"i", i}}); });
                       }
                     }
                   }});

  props.push_back({"render.pbm_determinism", "p in {" + join(o.primes) + "}, left and centered", o.primes.size() * 2,
                   [R, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       for (Alignment a : {Alignment::left, Alignment::centered}) {
                         sweep.run(
                           [&] {
                             RenderSpec spec;
                             spec.alignment = a;
                             const auto first = render_mask(divisibility_mask(p, R), spec);
                             const auto second = render_mask(divisibility_mask(p, R), spec);
                             return first == second;
                           },
                           [&] { return tuple({{"p", p}, {"centered", a == Alignment::centered}}); });
                       }
                     }
                   }});

  props.push_back({"render.alignment_consistency", "p in {" + join(o.primes) + "}, rows < " + std::to_string(R),
                   o.primes.size() * R, [R, primes = o.primes](PropertyResult& r) {
                     Sweep sweep(r);
                     for (natural p : primes) {
                       const auto mask = divisibility_mask(p, R);
                       RenderSpec left, centered;
                       centered.alignment = Alignment::centered;
                       const auto a = black_per_row(render_mask(mask, left));
                       const auto b = black_per_row(render_mask(mask, centered));
                       for (natural n = 0; n < R; ++n) {
                         sweep.run([&] { return n < a.size() && n < b.size() && a[n] == b[n]; },
                                   [&] { return tuple({{"p", p}, {"n", n}}); });
                       }
                     }
                   }});
}

// ---------------------------------------------------------------- kernels

void add_kernel_properties(std::vector<Property>& props, const VerifyOptions& o)
{
  static const std::vector<natural> moduli{2, 3, 7, 13, 251, 256, 257, 65521, 65536, 65537, 4'294'967'291ULL,
                                           4'294'967'311ULL};
  constexpr natural kRows = 80;
  const auto isas = kernels::available_isas();
  props.push_back({"kernels.isa_equivalence", std::to_string(isas.size() - 1) + " SIMD ISA(s) vs scalar, 12 moduli, 80 rows",
                   (isas.size() - 1) * moduli.size() * kRows, [isas, seed = o.seed](PropertyResult& r) {
                     Sweep sweep(r);
                     for (std::size_t v = 1; v < isas.size(); ++v) {
                       for (natural m : moduli) {
                         std::mt19937_64 rng(stream_seed(seed, 100 + m));
                         std::uniform_int_distribution<natural> dist(0, m - 1);
                         for (natural len = 1; len <= kRows; ++len) {
                           sweep.run(
                             [&] {
                               std::vector<std::uint64_t> prev(len);
                               for (auto& x : prev) x = dist(rng);
                               std::vector<std::uint64_t> want(len + 1), got(len + 1);
                               kernels::scalar::add_mod_row(std::span<const std::uint64_t>(prev), std::span(want), m);
#if defined(KUMMER_HAVE_AVX2)
                               if (isas[v] == kernels::Isa::avx2)
                                 kernels::avx2::add_mod_row(std::span<const std::uint64_t>(prev), std::span(got), m);
#endif
#if defined(KUMMER_HAVE_NEON)
                               if (isas[v] == kernels::Isa::neon)
                                 kernels::neon::add_mod_row(std::span<const std::uint64_t>(prev), std::span(got), m);
#endif
                               if (want != got) return false;
                               if (m > 0xFFFF'FFFF) return true;
                               std::vector<std::uint32_t> p32(prev.begin(), prev.end()), w32(len + 1), g32(len + 1);
                               kernels::scalar::add_mod_row(std::span<const std::uint32_t>(p32), std::span(w32),
                                                            static_cast<std::uint32_t>(m));
#if defined(KUMMER_HAVE_AVX2)
                               if (isas[v] == kernels::Isa::avx2)
                                 kernels::avx2::add_mod_row(std::span<const std::uint32_t>(p32), std::span(g32),
                                                            static_cast<std::uint32_t>(m));
#endif
#if defined(KUMMER_HAVE_NEON)
                               if (isas[v] == kernels::Isa::neon)
                                 kernels::neon::add_mod_row(std::span<const std::uint32_t>(p32), std::span(g32),
                                                            static_cast<std::uint32_t>(m));
#endif
                               return w32 == g32;
                             },
                             [&] {
                               return std::string(kernels::isa_name(isas[v])) + " " + tuple({{"m", m}, {"len", len}});
                             });
                         }
                       }
                     }
                   }});
}

} // namespace

bool VerifyReport::passed() const noexcept
{
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

std::string VerifyReport::to_text(bool include_timing) const
{
  std::ostringstream out;
  out << "verify: max_n=" << options.max_n << " primes=" << join(options.primes) << " rows=" << options.rows
      << " seed=" << options.seed << " isa=" << isa << "\n";
  std::size_t passed_count = 0;
  for (const PropertyResult& p : properties) {
    passed_count += p.passed();
    out << (p.passed() ? "PASS " : "FAIL ") << p.name << "  cases=" << p.cases;
    if (p.cases != p.declared) out << " (declared " << p.declared << ")";
    out << "  failures=" << p.failure_count;
    if (include_timing) out << "  elapsed_ms=" << static_cast<std::uint64_t>(p.elapsed_ms);
    out << "  [" << p.sweep << "]\n";
    for (const std::string& f : p.failures) out << "    counterexample " << f << "\n";
  }
  out << "summary: " << properties.size() << " properties, " << passed_count << " passed, "
      << properties.size() - passed_count << " failed\n";
  return out.str();
}

std::string VerifyReport::to_json(bool include_timing) const
{
  nlohmann::json props = nlohmann::json::array();
  for (const PropertyResult& p : properties) {
    nlohmann::json j{{"name", p.name},
                     {"sweep", p.sweep},
                     {"cases", p.cases},
                     {"declared_cases", p.declared},
                     {"failure_count", p.failure_count},
                     {"failures", p.failures},
                     {"passed", p.passed()}};
    if (include_timing) j["elapsed_ms"] = p.elapsed_ms;
    props.push_back(std::move(j));
  }
  nlohmann::json root{{"max_n", options.max_n}, {"primes", options.primes}, {"rows", options.rows},
                      {"seed", options.seed},   {"isa", isa},               {"passed", passed()},
                      {"properties", std::move(props)}};
  return root.dump(2) + "\n";
}

VerifyReport run_verify(const VerifyOptions& options)
{
  VerifyOptions o = options;
  std::sort(o.primes.begin(), o.primes.end());
  o.primes.erase(std::unique(o.primes.begin(), o.primes.end()), o.primes.end());
  for (natural p : o.primes) require_prime(p, "verify prime");
  if (o.primes.empty()) throw InvalidArgument("verify needs at least one prime");
  if (o.max_n > o.oracle_cap) {
    throw InvalidArgument("max_n " + std::to_string(o.max_n) + " exceeds the oracle cap " + std::to_string(o.oracle_cap));
  }
  if (o.rows < 1) throw InvalidArgument("verify needs rows >= 1");

  std::vector<Property> props;
  add_digit_properties(props, o);
  add_carry_properties(props, o);
  add_valuation_properties(props, o);
  add_triangle_properties(props, o);
  add_render_properties(props, o);
  add_kernel_properties(props, o);

  VerifyReport report{o, std::string(kernels::isa_name(kernels::active_isa())), {}};
  report.properties.resize(props.size());

  auto run_one = [&](std::size_t k) {
    PropertyResult& r = report.properties[k];
    r.name = props[k].name;
    r.sweep = props[k].sweep;
    r.declared = props[k].declared;
    const auto start = std::chrono::steady_clock::now();
    try {
      props[k].body(r);
    } catch (const std::exception& e) {
      ++r.failure_count;
      r.failures.push_back(std::string("sweep aborted: ") + e.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::sort(r.failures.begin(), r.failures.end());
  };

  unsigned threads = o.threads != 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(props.size()));
  if (threads <= 1) {
    for (std::size_t k = 0; k < props.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < props.size(); k = next++) run_one(k);
      });
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

} // namespace kummer
