#include "specht/tableau.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "specht/errors.hpp"

namespace specht {

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  try {
    return Partition(std::move(parts));
  } catch (const ShapeError&) {
    throw ShapeError("tableau rows must have weakly decreasing lengths >= 1");
  }
}

}  // namespace

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), shape_(shape_of_rows(rows_)) {
  std::set<int> seen;
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1) throw ShapeError("tableau letters must be positive");
      if (!seen.insert(v).second)
        throw ShapeError("tableau letters must be distinct");
    }
  letters_.assign(seen.begin(), seen.end());
}

YoungTableau YoungTableau::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad tableau JSON: ") + e.what(), 0);
  }
  if (!j.is_array() || j.empty())
    throw ParseError("tableau JSON must be a non-empty list of rows", 0);
  std::vector<std::vector<int>> rows;
  for (const auto& jr : j) {
    if (!jr.is_array())
      throw ParseError("tableau JSON rows must be lists", 0);
    std::vector<int> row;
    for (const auto& v : jr) {
      if (!v.is_number_integer())
        throw ParseError("tableau entries must be integers", 0);
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  try {
    return YoungTableau(std::move(rows));
  } catch (const ShapeError& e) {
    throw ParseError(e.what(), 0);
  }
}

int YoungTableau::entry(int row, int col) const {
  if (row < 1 || row > shape_.height())
    throw DomainError("tableau row out of range");
  const auto& r = rows_[static_cast<std::size_t>(row - 1)];
  if (col < 1 || col > static_cast<int>(r.size()))
    throw DomainError("tableau column out of range");
  return r[static_cast<std::size_t>(col - 1)];
}

std::vector<int> YoungTableau::column_entries(int j) const {
  if (j < 1 || j > shape_.part(1))
    throw DomainError("tableau column out of range");
  std::vector<int> col;
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) < j) break;
    col.push_back(row[static_cast<std::size_t>(j - 1)]);
  }
  return col;
}

int YoungTableau::column_height(int j) const {
  if (j < 1 || j > shape_.part(1))
    throw DomainError("tableau column out of range");
  int h = 0;
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) >= j) ++h;
  return h;
}

bool YoungTableau::is_standard() const {
  for (const auto& row : rows_)
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return false;
  for (std::size_t r = 1; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r - 1][c] >= rows_[r][c]) return false;
  return true;
}

std::vector<int> YoungTableau::reading_word() const {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(shape_.n()));
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::string YoungTableau::json_text() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows_) j.push_back(row);
  return j.dump();
}

namespace {

void check_letters(const Partition& shape, const std::vector<int>& letters) {
  if (static_cast<int>(letters.size()) != shape.n())
    throw ShapeError("letter set size must equal the shape size");
  std::set<int> s(letters.begin(), letters.end());
  if (static_cast<int>(s.size()) != shape.n())
    throw ShapeError("letter set must have distinct letters");
  for (int v : letters)
    if (v < 1) throw ShapeError("letters must be positive");
}

void sort_by_reading_word(std::vector<YoungTableau>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const YoungTableau& a, const YoungTableau& b) {
              return a.reading_word() < b.reading_word();
            });
}

// Places letters in increasing order; the k-th letter goes to any cell whose
// left and upper neighbors are already occupied, which keeps the filling
// standard and reaches every standard tableau exactly once.
void grow(const Partition& shape, const std::vector<int>& sorted_letters,
          std::size_t next, std::vector<int>& rowfill,
          std::vector<std::vector<int>>& rows,
          std::vector<YoungTableau>& out) {
  if (next == sorted_letters.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int r = 0; r < shape.height(); ++r) {
    int c = rowfill[static_cast<std::size_t>(r)];
    if (c >= shape.part(r + 1)) continue;
    if (r > 0 && rowfill[static_cast<std::size_t>(r - 1)] <= c) continue;
    rows[static_cast<std::size_t>(r)].push_back(sorted_letters[next]);
    ++rowfill[static_cast<std::size_t>(r)];
    grow(shape, sorted_letters, next + 1, rowfill, rows, out);
    --rowfill[static_cast<std::size_t>(r)];
    rows[static_cast<std::size_t>(r)].pop_back();
  }
}

}  // namespace

std::vector<YoungTableau> enumerate_standard_tableaux(
    const Partition& shape, const std::vector<int>& letters) {
  check_letters(shape, letters);
  std::vector<int> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> rowfill(static_cast<std::size_t>(shape.height()), 0);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.height()));
  std::vector<YoungTableau> out;
  grow(shape, sorted, 0, rowfill, rows, out);
  sort_by_reading_word(out);
  return out;
}

std::vector<YoungTableau> enumerate_standard_tableaux(const Partition& shape) {
  std::vector<int> letters(static_cast<std::size_t>(shape.n()));
  for (int i = 0; i < shape.n(); ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  return enumerate_standard_tableaux(shape, letters);
}

std::vector<YoungTableau> enumerate_all_tableaux(
    const Partition& shape, const std::vector<int>& letters) {
  check_letters(shape, letters);
  std::vector<int> word = letters;
  std::sort(word.begin(), word.end());
  std::vector<YoungTableau> out;
  // Reading words in lex order are exactly the permutations in lex order.
  do {
    std::vector<std::vector<int>> rows;
    std::size_t at = 0;
    for (int r = 0; r < shape.height(); ++r) {
      rows.emplace_back(word.begin() + static_cast<long>(at),
                        word.begin() + static_cast<long>(at) +
                            shape.part(r + 1));
      at += static_cast<std::size_t>(shape.part(r + 1));
    }
    out.emplace_back(std::move(rows));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace specht
