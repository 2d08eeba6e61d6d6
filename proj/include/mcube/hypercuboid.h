// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCUBE_HYPERCUBOID_H_
#define MCUBE_HYPERCUBOID_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mcube {

// Largest hypercuboid the library will index.
inline constexpr std::size_t kMaxPoints = 2'000'000;

// The vector (r_1, ..., r_d) of a hypercuboid. d may be 0.
class Width {
 public:
  Width() = default;
  explicit Width(std::vector<int> entries);
  Width(std::initializer_list<int> entries);

  std::size_t dimension() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int l1() const;
  int max_entry() const;

  auto operator<=>(const Width&) const = default;

 private:
  std::vector<int> entries_;
};

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t dimension() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  // Lexicographic. For points of one hypercuboid this is the canonical order.
  auto operator<=>(const Point&) const = default;

 private:
  std::vector<int> coords_;
};

Point join(const Point& a, const Point& b);
Point meet(const Point& a, const Point& b);
bool leq(const Point& a, const Point& b);
int l1(const Point& a);
Point complement(const Point& a, const Width& width);
// t * e_i in dimension d.
Point axis_point(std::size_t d, std::size_t i, int t);
Point top(const Width& width);
Point origin(std::size_t d);

std::string to_string(const Point& p);
std::string to_string(const Width& w);
std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Width& w);

// Indexes the points of a hypercuboid in canonical order: lexicographic with
// the last coordinate varying fastest. Copies share the geometry.
class Hypercuboid {
 public:
  Hypercuboid() : Hypercuboid(Width()) {}
  explicit Hypercuboid(Width width);

  const Width& width() const { return g_->width; }
  std::size_t dimension() const { return g_->width.dimension(); }
  std::size_t size() const { return g_->size; }
  std::size_t top() const { return g_->size - 1; }
  std::size_t stride(std::size_t axis) const { return g_->strides[axis]; }

  bool contains(const Point& p) const;
  // Throws InvalidInput for points outside the hypercuboid.
  std::size_t index(const Point& p) const;
  Point point(std::size_t index) const;
  std::vector<Point> points() const;

  int coord(std::size_t index, std::size_t axis) const {
    return g_->coords[index * dimension() + axis];
  }
  int l1(std::size_t index) const { return g_->l1[index]; }
  std::optional<std::size_t> up(std::size_t index, std::size_t axis) const;
  std::optional<std::size_t> down(std::size_t index, std::size_t axis) const;
  std::size_t complement(std::size_t index) const { return top() - index; }
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t axis_index(std::size_t axis, int t) const {
    return static_cast<std::size_t>(t) * stride(axis);
  }

  bool operator==(const Hypercuboid& o) const { return width() == o.width(); }

 private:
  struct Geometry {
    Width width;
    std::size_t size = 1;
    std::vector<std::size_t> strides;
    std::vector<int> coords;
    std::vector<int> l1;
  };
  std::shared_ptr<const Geometry> g_;
};

}  // namespace mcube

#endif  // MCUBE_HYPERCUBOID_H_
