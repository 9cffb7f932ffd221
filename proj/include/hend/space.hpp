#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hend {

/// A point of a ground space. PointCloud backends address points by id;
/// Euclidean backends use coords; the real line uses coords[0].
struct Point {
    std::size_t id = 0;
    std::vector<double> coords;

    static Point cloud(std::size_t id) { return Point{id, {}}; }
    static Point real(double x) { return Point{0, {x}}; }
    static Point eucl(std::vector<double> x) { return Point{0, std::move(x)}; }

    bool operator==(const Point& o) const { return id == o.id && coords == o.coords; }
};

/// A concrete metric space: a finite point cloud with an explicit distance
/// table, the Euclidean space R^m, or the real line (interval sets allowed).
class GroundSpace {
public:
    enum class Backend { PointCloud, Euclidean, RealLine };

    /// Table must be square, zero-diagonal, symmetric and nonnegative.
    /// With validate=true the triangle inequality is checked in O(n^3);
    /// the escape hatch is recorded in `validated()`.
    static GroundSpace point_cloud(std::vector<std::vector<double>> table, bool validate = true);
    static GroundSpace euclidean(std::size_t dim);
    static GroundSpace real_line();

    Backend backend() const { return backend_; }
    std::size_t dimension() const { return dim_; }
    std::size_t cloud_size() const { return table_.size(); }
    const std::vector<std::vector<double>>& table() const { return table_; }
    bool validated() const { return validated_; }

    double dist(const Point& p, const Point& q) const;

    /// Structural equality (same backend, same dimension / same table).
    bool same(const GroundSpace& other) const;

private:
    GroundSpace() = default;
    Backend backend_ = Backend::RealLine;
    std::size_t dim_ = 1;
    std::vector<std::vector<double>> table_;
    bool validated_ = true;
};

using SpacePtr = std::shared_ptr<const GroundSpace>;

inline SpacePtr make_point_cloud(std::vector<std::vector<double>> table, bool validate = true) {
    return std::make_shared<const GroundSpace>(GroundSpace::point_cloud(std::move(table), validate));
}
inline SpacePtr make_euclidean(std::size_t dim) {
    return std::make_shared<const GroundSpace>(GroundSpace::euclidean(dim));
}
inline SpacePtr make_real_line() {
    return std::make_shared<const GroundSpace>(GroundSpace::real_line());
}

/// A point of X x [0,1].
struct LiftedPoint {
    Point x;
    double t = 0.0;  // level in [0,1]
};

/// The two product metrics on X x [0,1]: Sum is d(x,y)+|s-t|, Max is
/// max{d(x,y), |s-t|}. They sandwich each other within a factor of 2.
enum class ProductMetricVariant { Sum, Max };

double product_dist(const GroundSpace& space, ProductMetricVariant variant,
                    const LiftedPoint& a, const LiftedPoint& b);

/// Combine a ground distance and a level distance under the chosen variant.
inline double combine(ProductMetricVariant v, double dx, double dt) {
    return v == ProductMetricVariant::Sum ? dx + dt : (dx > dt ? dx : dt);
}

}  // namespace hend
