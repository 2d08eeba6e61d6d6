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

#include "mcube/hypercuboid.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcube/error.h"

namespace mcube {

namespace {

void require_same_dimension(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) {
    throw InvalidInput("dimension mismatch: " + to_string(a) + " vs " +
                       to_string(b));
  }
}

}  // namespace

Width::Width(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int r : entries_) {
    if (r < 0) throw InvalidInput("negative width entry");
  }
}

Width::Width(std::initializer_list<int> entries)
    : Width(std::vector<int>(entries)) {}

int Width::l1() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int Width::max_entry() const {
  return entries_.empty() ? 0
                          : *std::max_element(entries_.begin(), entries_.end());
}

Point join(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  std::vector<int> c(a.dimension());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(a[i], b[i]);
  return Point(std::move(c));
}

Point meet(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  std::vector<int> c(a.dimension());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
  return Point(std::move(c));
}

bool leq(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int l1(const Point& a) {
  return std::accumulate(a.coords().begin(), a.coords().end(), 0);
}

Point complement(const Point& a, const Width& width) {
  if (a.dimension() != width.dimension()) {
    throw InvalidInput("dimension mismatch: " + to_string(a) + " in width " +
                       to_string(width));
  }
  std::vector<int> c(a.dimension());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (a[i] < 0 || a[i] > width[i]) {
      throw InvalidInput("point " + to_string(a) + " outside width " +
                         to_string(width));
    }
    c[i] = width[i] - a[i];
  }
  return Point(std::move(c));
}

Point axis_point(std::size_t d, std::size_t i, int t) {
  std::vector<int> c(d, 0);
  c.at(i) = t;
  return Point(std::move(c));
}

Point top(const Width& width) { return Point(width.entries()); }

Point origin(std::size_t d) { return Point(std::vector<int>(d, 0)); }

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Width& w) { return to_string(Point(w.entries())); }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << to_string(p);
}

std::ostream& operator<<(std::ostream& os, const Width& w) {
  return os << to_string(w);
}

Hypercuboid::Hypercuboid(Width width) {
  auto g = std::make_shared<Geometry>();
  const std::size_t d = width.dimension();
  g->strides.assign(d, 1);
  std::size_t size = 1;
  for (std::size_t k = d; k-- > 0;) {
    g->strides[k] = size;
    size *= static_cast<std::size_t>(width[k]) + 1;
    if (size > kMaxPoints) {
      throw SizeLimitError("hypercuboid of width " + to_string(width) +
                           " exceeds " + std::to_string(kMaxPoints) +
                           " points");
    }
  }
  g->size = size;
  g->coords.resize(size * d);
  g->l1.resize(size);
  std::vector<int> x(d, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    int s = 0;
    for (std::size_t k = 0; k < d; ++k) {
      g->coords[idx * d + k] = x[k];
      s += x[k];
    }
    g->l1[idx] = s;
    for (std::size_t k = d; k-- > 0;) {
      if (x[k] < width[k]) {
        ++x[k];
        break;
      }
      x[k] = 0;
    }
  }
  g->width = std::move(width);
  g_ = std::move(g);
}

bool Hypercuboid::contains(const Point& p) const {
  if (p.dimension() != dimension()) return false;
  for (std::size_t k = 0; k < dimension(); ++k) {
    if (p[k] < 0 || p[k] > width()[k]) return false;
  }
  return true;
}

std::size_t Hypercuboid::index(const Point& p) const {
  if (!contains(p)) {
    throw InvalidInput("point " + to_string(p) + " outside width " +
                       to_string(width()));
  }
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dimension(); ++k) {
    idx += static_cast<std::size_t>(p[k]) * g_->strides[k];
  }
  return idx;
}

Point Hypercuboid::point(std::size_t index) const {
  const std::size_t d = dimension();
  return Point(std::vector<int>(g_->coords.begin() + index * d,
                                g_->coords.begin() + (index + 1) * d));
}

std::vector<Point> Hypercuboid::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

std::optional<std::size_t> Hypercuboid::up(std::size_t index,
                                           std::size_t axis) const {
  if (coord(index, axis) >= width()[axis]) return std::nullopt;
  return index + g_->strides[axis];
}

std::optional<std::size_t> Hypercuboid::down(std::size_t index,
                                             std::size_t axis) const {
  if (coord(index, axis) == 0) return std::nullopt;
  return index - g_->strides[axis];
}

bool Hypercuboid::leq(std::size_t a, std::size_t b) const {
  for (std::size_t k = 0; k < dimension(); ++k) {
    if (coord(a, k) > coord(b, k)) return false;
  }
  return true;
}

std::size_t Hypercuboid::join(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dimension(); ++k) {
    idx += static_cast<std::size_t>(std::max(coord(a, k), coord(b, k))) *
           g_->strides[k];
  }
  return idx;
}

std::size_t Hypercuboid::meet(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dimension(); ++k) {
    idx += static_cast<std::size_t>(std::min(coord(a, k), coord(b, k))) *
           g_->strides[k];
  }
  return idx;
}

}  // namespace mcube
