#include "hend/space.hpp"

#include <cmath>

namespace hend {

GroundSpace GroundSpace::point_cloud(std::vector<std::vector<double>> table, bool validate) {
    const std::size_t n = table.size();
    for (const auto& row : table)
        if (row.size() != n) throw std::invalid_argument("point cloud table must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i][i] != 0.0) throw std::invalid_argument("point cloud table diagonal must be zero");
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] < 0.0) throw std::invalid_argument("point cloud distances must be nonnegative");
            if (table[i][j] != table[j][i]) throw std::invalid_argument("point cloud table must be symmetric");
            if (i != j && table[i][j] == 0.0)
                throw std::invalid_argument("distinct cloud points must be at positive distance");
        }
    }
    if (validate) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (table[i][j] > table[i][k] + table[k][j] + 1e-12)
                        throw std::invalid_argument("point cloud table violates the triangle inequality");
    }
    GroundSpace s;
    s.backend_ = Backend::PointCloud;
    s.dim_ = 0;
    s.table_ = std::move(table);
    s.validated_ = validate;
    return s;
}

GroundSpace GroundSpace::euclidean(std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("euclidean dimension must be >= 1");
    GroundSpace s;
    s.backend_ = Backend::Euclidean;
    s.dim_ = dim;
    return s;
}

GroundSpace GroundSpace::real_line() {
    GroundSpace s;
    s.backend_ = Backend::RealLine;
    s.dim_ = 1;
    return s;
}

double GroundSpace::dist(const Point& p, const Point& q) const {
    switch (backend_) {
        case Backend::PointCloud:
            if (p.id >= table_.size() || q.id >= table_.size())
                throw std::domain_error("unknown point id");
            return table_[p.id][q.id];
        case Backend::Euclidean: {
            if (p.coords.size() != dim_ || q.coords.size() != dim_)
                throw std::domain_error("point has wrong dimension");
            double s = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
                const double d = p.coords[i] - q.coords[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case Backend::RealLine:
            if (p.coords.size() != 1 || q.coords.size() != 1)
                throw std::domain_error("real-line point needs exactly one coordinate");
            return std::fabs(p.coords[0] - q.coords[0]);
    }
    throw std::logic_error("unreachable");
}

bool GroundSpace::same(const GroundSpace& other) const {
    if (backend_ != other.backend_) return false;
    if (backend_ == Backend::Euclidean) return dim_ == other.dim_;
    if (backend_ == Backend::PointCloud) return table_ == other.table_;
    return true;
}

double product_dist(const GroundSpace& space, ProductMetricVariant variant,
                    const LiftedPoint& a, const LiftedPoint& b) {
    if (a.t < 0.0 || a.t > 1.0 || b.t < 0.0 || b.t > 1.0)
        throw std::domain_error("level must lie in [0,1]");
    return combine(variant, space.dist(a.x, b.x), std::fabs(a.t - b.t));
}

}  // namespace hend
