#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdt/carrier.hpp"
#include "qdt/profile.hpp"
#include "qdt/report.hpp"
#include "qdt/xreal.hpp"

namespace qdt {

struct CarrierMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Total table source x target -> [0, inf], row-major.
class GRel {
 public:
  GRel() = default;
  GRel(Carrier source, Carrier target, ExtReal fill = ExtReal());
  GRel(Carrier square, ExtReal fill = ExtReal()) : GRel(square, square, fill) {}  // NOLINT

  // 0 on the diagonal, inf elsewhere.
  static GRel identity(const Carrier& c);
  template <class F>
  static GRel tabulate(const Carrier& s, const Carrier& t, F&& f) {
    GRel r(s, t);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) r(i, j) = f(i, j);
    return r;
  }

  const Carrier& source() const { return source_; }
  const Carrier& target() const { return target_; }
  std::size_t rows() const { return source_.size(); }
  std::size_t cols() const { return target_.size(); }
  bool is_square() const { return source_ == target_; }

  const ExtReal& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }
  ExtReal& operator()(std::size_t i, std::size_t j) { return cells_[i * cols() + j]; }
  const std::vector<ExtReal>& cells() const { return cells_; }

  friend bool operator==(const GRel&, const GRel&) = default;

 private:
  Carrier source_;
  Carrier target_;
  std::vector<ExtReal> cells_;
};

// Function X -> [0, inf].
class UnaryFn {
 public:
  UnaryFn() = default;
  explicit UnaryFn(Carrier c, ExtReal fill = ExtReal()) : carrier_(std::move(c)), values_(carrier_.size(), fill) {}

  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return values_.size(); }
  const ExtReal& operator[](std::size_t i) const { return values_[i]; }
  ExtReal& operator[](std::size_t i) { return values_[i]; }
  const std::vector<ExtReal>& values() const { return values_; }

  friend bool operator==(const UnaryFn&, const UnaryFn&) = default;

 private:
  Carrier carrier_;
  std::vector<ExtReal> values_;
};

void require_square(const GRel& d, const char* what);
void require_same_shape(const GRel& d, const GRel& e, const char* what);

GRel compose(const GRel& d, const GRel& e);
GRel opposite(const GRel& d);
GRel join(const GRel& d, const GRel& e);
GRel meet(const GRel& d, const GRel& e);
GRel symmetrize(const GRel& d);
// d/e: x(d/e)y = sup_z (xdz - yez)+, d: X x Z, e: Y x Z
GRel kan_right(const GRel& d, const GRel& e);
// e\d: x(e\d)y = sup_z (zdy - zex)+, e: Z x X, d: Z x Y
GRel kan_left(const GRel& e, const GRel& d);
// characteristic table of {(x,y) : xdy = 0}
GRel zero_relation(const GRel& d);
GRel scale(const GRel& d, const ExtReal& k);
// e composed with the uniformity of d; on finite carriers this is e o zero_relation(d)
GRel compose_uniformity(const GRel& e, const GRel& d);
// submatrix on the given rows and columns, carriers restricted accordingly
GRel submatrix(const GRel& d, Subset rows, Subset cols);
Carrier sub_carrier(const Carrier& c, Subset s);

bool leq(const GRel& d, const GRel& e);
// first cell with d > e
std::optional<std::pair<std::size_t, std::size_t>> first_excess(const GRel& d, const GRel& e);
// true if every zero cell of e is a zero cell of d: d is uniformly below e
bool uniform_leq(const GRel& d, const GRel& e);

UnaryFn row(const GRel& d, std::size_t x);
UnaryFn column(const GRel& d, std::size_t y);

enum class SetMode { sup, inf };
enum class NetMode { limsup, liminf };

// sup: (Vd)(y) = sup_{v in V} vdy. inf: (dW)(x) = inf_{w in W} xdw.
UnaryFn apply_set(Subset v, const GRel& d, SetMode mode);
// limsup: ((x_l)d)(y) = limsup x_l d y. liminf: (d(x_l))(x) = liminf x d x_l.
UnaryFn apply_net(const NetProfile& p, const GRel& d, NetMode mode);
// the variants for the other side of d
UnaryFn apply_net_rows(const NetProfile& p, const GRel& d, NetMode mode);
UnaryFn apply_net_cols(const NetProfile& p, const GRel& d, NetMode mode);

ExtReal sup_over(const UnaryFn& f, Subset s);
ExtReal inf_over(const UnaryFn& f, Subset s);
bool leq(const UnaryFn& f, const UnaryFn& g);
bool uniform_leq(const UnaryFn& f, const UnaryFn& g);
// (f/g)(r) = sup_{g(x) <= r} f(x)
ExtReal modulus(const UnaryFn& f, const UnaryFn& g, const ExtReal& r);

std::string format_table(const GRel& d);

// Associativity, involution, the Kan adjunction chain and the related inequalities,
// for three relations on one carrier.
Report check_category_laws(const GRel& d, const GRel& e, const GRel& f);

}  // namespace qdt
