#pragma once

#include <string>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

/// Young tableau: a filling of the diagram of a shape by a finite letter set
/// (positive integers, all distinct). Letters default to {1,...,n}.
class YoungTableau {
 public:
  /// Rows give the shape; entries must be distinct positive integers.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  /// Parses the JSON list-of-rows form, e.g. [[3,5,1,7],[6,2],[4]].
  static YoungTableau from_json_text(const std::string& text);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Sorted ascending.
  const std::vector<int>& letters() const { return letters_; }
  int entry(int row, int col) const;  // 1-based

  /// Entries of column j, top to bottom. 1-based, j <= shape.parts[0].
  std::vector<int> column_entries(int j) const;
  int column_height(int j) const;

  /// Rows increase left to right and columns increase top to bottom.
  bool is_standard() const;

  /// Concatenated rows, top row first.
  std::vector<int> reading_word() const;

  bool operator==(const YoungTableau& o) const { return rows_ == o.rows_; }
  bool operator!=(const YoungTableau& o) const { return rows_ != o.rows_; }

  std::string json_text() const;
  /// One-line display: [[3,5,1,7],[6,2],[4]].
  std::string str() const { return json_text(); }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<int> letters_;
};

/// All standard tableaux of the shape on the given letters, sorted by
/// reading word lexicographically. |letters| must equal shape.n.
std::vector<YoungTableau> enumerate_standard_tableaux(
    const Partition& shape, const std::vector<int>& letters);

/// Letters {1,...,n}.
std::vector<YoungTableau> enumerate_standard_tableaux(const Partition& shape);

/// All tableaux (bijective fillings) of the shape on the given letters,
/// sorted by reading word. Grows factorially; desk scale only.
std::vector<YoungTableau> enumerate_all_tableaux(
    const Partition& shape, const std::vector<int>& letters);

}  // namespace specht
