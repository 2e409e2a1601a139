#include "ttab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ttab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      raise(Errc::not_weakly_decreasing, "negative part in " + Partition().to_string());
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      raise(Errc::not_weakly_decreasing, "parts must weakly decrease");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 1; i <= mu.length(); ++i) {
    if (part(i) < mu.part(i)) return false;
  }
  return true;
}

bool Partition::strictly_decreasing() const {
  for (size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] >= parts_[i - 1]) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0], 0);
  for (int col = 1; col <= parts_[0]; ++col) {
    int count = 0;
    for (int p : parts_) {
      if (p >= col) ++count;
    }
    c[col - 1] = count;
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition make_partition(const std::vector<int>& parts) { return Partition(parts); }

Partition staircase(int k) {
  if (k < 0) raise(Errc::domain_error, "staircase needs k >= 0");
  std::vector<int> p;
  for (int i = k; i >= 1; --i) p.push_back(i);
  return Partition(std::move(p));
}

Partition rectangle(int width, int height) {
  if (width < 0 || height < 0) raise(Errc::domain_error, "rectangle needs nonnegative sides");
  if (width == 0) return Partition();
  return Partition(std::vector<int>(height, width));
}

Partition almost_square(int k) {
  if (k < 1) raise(Errc::domain_error, "almost_square needs k >= 1");
  std::vector<int> p(k - 1, k);
  p.push_back(k - 1);
  return Partition(std::move(p));
}

}  // namespace ttab
