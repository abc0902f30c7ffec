#include "orbitgraph/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitgraph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size())
      throw std::invalid_argument("bad partition entry: " + tok);
    parts.push_back(v);
  }
  return Partition(parts);
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.resize(parts_[0]);
    for (int col = 1; col <= parts_[0]; ++col)
      t[col - 1] = static_cast<int>(std::count_if(
          parts_.begin(), parts_.end(), [col](int r) { return r >= col; }));
  }
  return Partition(t);
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int x : parts_) {
    if (!out.empty() && out.back().first == x)
      ++out.back().second;
    else
      out.emplace_back(x, 1);
  }
  return out;
}

int Partition::count_odd_parts() const {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [](int x) { return x % 2; }));
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

KSequence k_sequence(const Partition& lambda) {
  KSequence ks;
  const int l = lambda.length();
  for (int j = 1; j <= l; ++j)
    if ((lambda.part(j) - lambda.part(j + 1)) % 2 != 0) ks.k.push_back(j);
  if (ks.k.empty()) {
    // No odd part: the formal one-term sequence (0).
    ks.k.push_back(0);
    ks.formal = true;
  }
  return ks;
}

Partition remove_column_pair(const Partition& lambda, int h) {
  if (h < 1 || h > lambda.length() ||
      lambda.part(h) - lambda.part(h + 1) < 2)
    throw std::invalid_argument("no removable column pair of height " +
                                std::to_string(h) + " in (" +
                                lambda.to_string() + ")");
  std::vector<int> parts = lambda.parts();
  for (int j = 0; j < h; ++j) parts[j] -= 2;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  // Rows above h stay put and parts[h-1] >= lambda.part(h+1), so the result
  // is already sorted.
  return Partition(parts);
}

std::vector<int> removable_column_heights(const Partition& lambda) {
  std::vector<int> out;
  for (int h = 1; h <= lambda.length(); ++h)
    if (lambda.part(h) - lambda.part(h + 1) >= 2) out.push_back(h);
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool yd_membership(const Partition& lambda, PairType type) {
  for (auto [len, mult] : lambda.multiplicities()) {
    switch (type) {
      case PairType::AIII:
        break;
      case PairType::BDI:
        if (len % 2 == 0 && mult % 2 != 0) return false;
        break;
      case PairType::CI:
        if (len % 2 != 0 && mult % 2 != 0) return false;
        break;
      case PairType::CII:
      case PairType::DIII:
        if (mult % 2 != 0) return false;
        break;
    }
  }
  return true;
}

bool is_even_orbit(const Partition& lambda) {
  const auto& p = lambda.parts();
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; }) ||
         std::all_of(p.begin(), p.end(), [](int x) { return x % 2 != 0; });
}

OrbitDim orbit_dimension(const Partition& lambda, PairType type) {
  if (!yd_membership(lambda, type))
    throw std::invalid_argument("shape (" + lambda.to_string() +
                                ") not admissible for " + to_string(type));
  const long long n = lambda.n();
  long long sq = 0;
  const Partition tr = lambda.transpose();
  for (int t : tr.parts()) sq += 1LL * t * t;
  const long long odd = lambda.count_odd_parts();

  long long dim_g = 0;
  switch (type) {
    case PairType::AIII:
      dim_g = n * n - sq;
      break;
    case PairType::BDI:
    case PairType::DIII: {
      long long num = n * (n - 1) - sq + odd;
      if (num % 2) throw std::domain_error("odd orthogonal dimension");
      dim_g = num / 2;
      break;
    }
    case PairType::CI:
    case PairType::CII: {
      long long num = n * (n + 1) - sq - odd;
      if (num % 2) throw std::domain_error("odd symplectic dimension");
      dim_g = num / 2;
      break;
    }
  }
  if (dim_g % 2) throw std::domain_error("orbit dimension is odd");
  return OrbitDim{dim_g, dim_g / 2};
}

namespace {
void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

}  // namespace orbitgraph
