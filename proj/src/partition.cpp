#include "specht/partition.hpp"

#include <sstream>

#include "specht/errors.hpp"

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ShapeError("partition needs at least one part");
  n_ = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ShapeError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected a partition part", pos);
    if (pos - start > 7) throw ParseError("partition part too large", start);
    parts.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  try {
    return Partition(std::move(parts));
  } catch (const ShapeError& e) {
    throw ParseError(e.what(), 0);
  }
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  return out.str();
}

namespace {

void extend(std::vector<int>& cur, int remaining, int cap,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    cur.push_back(next);
    extend(cur, remaining - next, next, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw DomainError("enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  extend(cur, n, n, out);
  return out;
}

mpz_class count_syt_hook(const Partition& shape) {
  const auto& parts = shape.parts();
  Partition conj = shape.conjugate();
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(shape.n()));
  mpz_class den = 1;
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (int c = 0; c < parts[r]; ++c) {
      // hook = arm + leg + 1
      int arm = parts[r] - c - 1;
      int leg = conj.parts()[static_cast<std::size_t>(c)] -
                static_cast<int>(r) - 1;
      den *= arm + leg + 1;
    }
  return num / den;
}

}  // namespace specht
