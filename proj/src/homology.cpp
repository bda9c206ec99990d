#include "stanley/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace stanley {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Row-echelon rank of a dense GF(2) matrix with bit-packed rows.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
  int rank = 0;
  const int words = (cols + 63) / 64;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    const int w = c >> 6;
    const std::uint64_t b = std::uint64_t{1} << (c & 63);
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(w)] & b) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(w)] & b)
        for (int k = w; k < words; ++k)
          rows[static_cast<size_t>(r)][static_cast<size_t>(k)] ^=
              rows[static_cast<size_t>(rank)][static_cast<size_t>(k)];
    }
    ++rank;
  }
  return rank;
}

// Rank over GF(p) by plain elimination; entries are reduced mod p.
int gfp_rank(std::vector<std::vector<std::int64_t>> rows, int cols, int p) {
  auto inv_mod = [&](std::int64_t a) {
    // Fermat inverse; p is prime and small.
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(c)] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    auto& pr = rows[static_cast<size_t>(rank)];
    std::int64_t scale = inv_mod((pr[static_cast<size_t>(c)] % p + p) % p);
    for (auto& x : pr) x = (x % p + p) % p * scale % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      auto& rr = rows[static_cast<size_t>(r)];
      std::int64_t f = (rr[static_cast<size_t>(c)] % p + p) % p;
      if (f == 0) continue;
      for (int k = c; k < cols; ++k)
        rr[static_cast<size_t>(k)] = ((rr[static_cast<size_t>(k)] - f * pr[static_cast<size_t>(k)]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Rank of the boundary map from faces of cardinality c to cardinality c-1.
int boundary_rank(const std::vector<Mask>& level_from, const std::vector<Mask>& level_to,
                  int p) {
  if (level_from.empty() || level_to.empty()) return 0;
  std::unordered_map<Mask, int> col;
  col.reserve(level_to.size() * 2);
  for (size_t k = 0; k < level_to.size(); ++k) col[level_to[k]] = static_cast<int>(k);
  const int cols = static_cast<int>(level_to.size());

  if (p == 2) {
    const int words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        level_from.size(), std::vector<std::uint64_t>(static_cast<size_t>(words), 0));
    for (size_t r = 0; r < level_from.size(); ++r)
      for (Mask m = level_from[r]; m; m &= m - 1) {
        Mask face = level_from[r] & ~(m & (~m + 1));
        int c = col.at(face);
        rows[r][static_cast<size_t>(c >> 6)] ^= std::uint64_t{1} << (c & 63);
      }
    return gf2_rank(std::move(rows), cols);
  }

  std::vector<std::vector<std::int64_t>> rows(
      level_from.size(), std::vector<std::int64_t>(static_cast<size_t>(cols), 0));
  for (size_t r = 0; r < level_from.size(); ++r) {
    int pos = 0;
    for (Mask m = level_from[r]; m; m &= m - 1, ++pos) {
      Mask face = level_from[r] & ~(m & (~m + 1));
      rows[r][static_cast<size_t>(col.at(face))] = (pos % 2 == 0) ? 1 : p - 1;
    }
  }
  return gfp_rank(std::move(rows), cols, p);
}

// Reduced homology dims from faces already grouped by cardinality.
std::vector<int> homology_from_levels(const std::vector<std::vector<Mask>>& levels, int p) {
  if (levels.empty()) return {};
  const int top = static_cast<int>(levels.size()) - 1;
  std::vector<int> ranks(static_cast<size_t>(top) + 2, 0);  // ranks[c] = rank of d_c
  for (int c = 1; c <= top; ++c)
    ranks[static_cast<size_t>(c)] =
        boundary_rank(levels[static_cast<size_t>(c)], levels[static_cast<size_t>(c - 1)], p);
  std::vector<int> dims(static_cast<size_t>(top) + 1, 0);  // dims[c] = H~_{c-1}
  for (int c = 0; c <= top; ++c)
    dims[static_cast<size_t>(c)] = static_cast<int>(levels[static_cast<size_t>(c)].size()) -
                                   ranks[static_cast<size_t>(c)] -
                                   ranks[static_cast<size_t>(c) + 1];
  return dims;
}

}  // namespace

FieldChar::FieldChar(int prime) : p(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("FieldChar: p must be prime");
}

void BettiTable::set(int i, Mask sigma, int rank) {
  if (rank < 0) throw std::invalid_argument("BettiTable: negative rank");
  if (rank > 0) entries_[{i, sigma}] = rank;
}

int BettiTable::rank(int i, Mask sigma) const {
  auto it = entries_.find({i, sigma});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, rank] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::vector<int> reduced_homology_dims(const std::vector<Mask>& faces, FieldChar field) {
  if (faces.empty()) return {};
  std::unordered_set<Mask> face_set(faces.begin(), faces.end());
  int top = 0;
  for (Mask f : faces) top = std::max(top, popcount(f));
  if (!face_set.count(0))
    throw std::invalid_argument("reduced_homology_dims: missing empty face");
  for (Mask f : face_set)
    for (Mask m = f; m; m &= m - 1)
      if (!face_set.count(f & ~(m & (~m + 1))))
        throw std::invalid_argument("reduced_homology_dims: face list not down-closed");

  std::vector<std::vector<Mask>> levels(static_cast<size_t>(top) + 1);
  for (Mask f : faces) levels[static_cast<size_t>(popcount(f))].push_back(f);
  return homology_from_levels(levels, field.p);
}

std::vector<std::uint64_t> membership_bits(const SquarefreeIdeal& ideal) {
  const int n = ideal.ambient();
  if (n > 26)
    throw std::invalid_argument("membership_bits: ambient too large to enumerate");
  const Mask total = Mask{1} << n;
  std::vector<std::uint64_t> bits((total + 63) / 64, 0);
  for (const Support& g : ideal.gens()) put_bit(bits, g.bits());
  for (int b = 0; b < n; ++b) {
    const Mask vb = bit(b);
    for (Mask m = 0; m < total; ++m)
      if ((m & vb) && get_bit(bits, m ^ vb)) put_bit(bits, m);
  }
  return bits;
}

namespace {

BettiTable hochster_impl(const SquarefreeIdeal& ideal, FieldChar field, bool prune) {
  if (ideal.is_zero())
    throw std::invalid_argument("hochster_betti: zero ideal has the trivial resolution");
  const int n = ideal.ambient();
  auto member = membership_bits(ideal);
  const Mask total = Mask{1} << n;

  // For the cone skip: the generators touching each vertex.
  std::vector<std::vector<Mask>> gens_at(static_cast<size_t>(n));
  for (const Support& g : ideal.gens())
    for (int v : g.indices()) gens_at[static_cast<size_t>(v)].push_back(g.bits());

  BettiTable table;
  std::vector<std::vector<Mask>> levels(static_cast<size_t>(n) + 1);
  for (Mask sigma = 0; sigma < total; ++sigma) {
    if (prune) {
      bool cone = false;
      for (Mask m = sigma; m && !cone; m &= m - 1) {
        int v = std::countr_zero(m);
        bool touched = false;
        for (Mask g : gens_at[static_cast<size_t>(v)])
          if ((g & ~sigma) == 0) {
            touched = true;
            break;
          }
        if (!touched) cone = true;
      }
      if (cone) continue;
    }

    const int card = popcount(sigma);
    for (auto& level : levels) level.clear();
    int top = -1;
    for_each_submask(sigma, [&](Mask f) {
      if (!get_bit(member, f)) {
        int c = popcount(f);
        levels[static_cast<size_t>(c)].push_back(f);
        top = std::max(top, c);
      }
    });
    if (top < 0) continue;  // void restriction
    std::vector<std::vector<Mask>> used(levels.begin(), levels.begin() + top + 1);
    std::vector<int> dims = homology_from_levels(used, field.p);
    // dims[c] = H~_{c-1}; Hochster: beta_{i,sigma} = H~_{card-i-1}, so i = card-c.
    for (int c = 0; c <= top; ++c)
      if (dims[static_cast<size_t>(c)] > 0)
        table.set(card - c, sigma, dims[static_cast<size_t>(c)]);
  }
  return table;
}

}  // namespace

BettiTable hochster_betti(const SquarefreeIdeal& ideal, FieldChar field) {
  return hochster_impl(ideal, field, true);
}

BettiTable hochster_betti_unpruned(const SquarefreeIdeal& ideal, FieldChar field) {
  return hochster_impl(ideal, field, false);
}

int depth_quotient(const SquarefreeIdeal& ideal, FieldChar field) {
  if (ideal.is_zero()) return ideal.ambient();  // free module
  BettiTable table = hochster_betti(ideal, field);
  return ideal.ambient() - table.projective_dimension();
}

int depth_ideal(const SquarefreeIdeal& ideal, FieldChar field) {
  if (ideal.is_zero())
    throw std::invalid_argument("depth_ideal: zero ideal");
  return depth_quotient(ideal, field) + 1;
}

CharSensitivityReport char_sensitivity(const SquarefreeIdeal& ideal,
                                       const std::vector<int>& primes) {
  if (primes.size() < 2)
    throw std::invalid_argument("char_sensitivity: need at least two primes");
  CharSensitivityReport report;
  for (int p : primes)
    report.depth_by_char.emplace_back(p, depth_quotient(ideal, FieldChar(p)));
  for (const auto& [p, d] : report.depth_by_char)
    if (d != report.depth_by_char.front().second) report.agree = false;
  return report;
}

}  // namespace stanley
