#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaxsolve {

// Largest state dimension among the supported models (two-phase: rho, rho u, rho E, rho phi).
inline constexpr std::size_t kMaxComponents = 4;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(std::size_t cell, std::string what)
      : std::runtime_error("inadmissible state in cell " + std::to_string(cell) + ": " + what),
        cell_(cell) {}
  std::size_t cell() const { return cell_; }

 private:
  std::size_t cell_;
};

// Fixed-capacity state vector. Holds W = (W^(1), W^(2)) for one cell, or a
// slice of it; no heap allocation.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t n) : n_(check_size(n)) {}
  StateVector(std::initializer_list<double> values) : n_(check_size(values.size())) {
    std::size_t i = 0;
    for (double v : values) c_[i++] = v;
  }

  std::size_t size() const { return n_; }
  double& operator[](std::size_t i) { return c_[i]; }
  double operator[](std::size_t i) const { return c_[i]; }

  double* begin() { return c_.data(); }
  double* end() { return c_.data() + n_; }
  const double* begin() const { return c_.data(); }
  const double* end() const { return c_.data() + n_; }

  std::span<const double> values() const { return {c_.data(), n_}; }

  // Components [first, first + count).
  StateVector slice(std::size_t first, std::size_t count) const {
    StateVector out(count);
    for (std::size_t i = 0; i < count; ++i) out.c_[i] = c_[first + i];
    return out;
  }

  StateVector& operator+=(const StateVector& o) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  StateVector& operator*=(double s) {
    for (std::size_t i = 0; i < n_; ++i) c_[i] *= s;
    return *this;
  }

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(double s, StateVector a) { return a *= s; }
  friend StateVector operator*(StateVector a, double s) { return a *= s; }

  friend bool operator==(const StateVector& a, const StateVector& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (a.c_[i] != b.c_[i]) return false;
    }
    return true;
  }

 private:
  static std::size_t check_size(std::size_t n) {
    if (n > kMaxComponents) throw std::length_error("StateVector: too many components");
    return n;
  }

  std::array<double, kMaxComponents> c_{};
  std::size_t n_ = 0;
};

// Concatenation (W^(1), W^(2)).
StateVector join(const StateVector& head, const StateVector& tail);

double max_abs_difference(const StateVector& a, const StateVector& b);

// Uniform mesh on [x_min, x_max]; cell j covers [x_min + j dx, x_min + (j+1) dx].
class Grid1D {
 public:
  Grid1D() = default;
  Grid1D(double x_min, double x_max, std::size_t n_cells);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t n_cells() const { return n_cells_; }
  double dx() const { return (x_max_ - x_min_) / static_cast<double>(n_cells_); }
  double center(std::size_t j) const { return x_min_ + (static_cast<double>(j) + 0.5) * dx(); }
  double length() const { return x_max_ - x_min_; }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double x_min_ = 0.0;
  double x_max_ = 1.0;
  std::size_t n_cells_ = 1;
};

struct FieldState {
  Grid1D grid;
  std::vector<StateVector> cells;
  double time = 0.0;
};

}  // namespace relaxsolve
