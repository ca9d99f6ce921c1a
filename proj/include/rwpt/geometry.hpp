#pragma once
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rwpt/errors.hpp"

namespace rwpt {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    Point operator-() const { return {-x, -y}; }
};

inline std::int64_t norm_sq(const Point& p) { return p.x * p.x + p.y * p.y; }
inline double norm(const Point& p) { return std::sqrt(static_cast<double>(norm_sq(p))); }

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(p.y) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Planar geometry is K == 0; toral geometry carries the side length K >= 8.
struct Geometry {
    int K = 0;

    bool toral() const { return K > 0; }
    static Geometry planar() { return {0}; }
    static Geometry torus(int K) {
        if (K < 8) throw InvalidArgument("torus side K must be >= 8");
        return {K};
    }
    friend bool operator==(const Geometry& a, const Geometry& b) { return a.K == b.K; }
};

// Coordinatewise ((x + floor(K/2)) mod K) - floor(K/2); the primary copy is
// [-floor(K/2), K - floor(K/2))^2.
Point project_pi(const Point& p, int K);

// Minimum Euclidean distance over the 9 neighboring copies; inputs are taken
// mod K first, so unprojected points are accepted. Result <= K*sqrt(2)/2.
double torus_distance(const Point& a, const Point& b, int K);
std::int64_t torus_distance_sq(const Point& a, const Point& b, int K);

struct JumpLabels {
    bool baby = false;
    bool small = false;
    bool medium = false;
    bool large = false;
    std::vector<int> targeted; // all j >= 1 with j(K-2n) <= |step| <= j(K+2n)/sqrt(2)

    bool is_targeted() const { return !targeted.empty(); }
};

// Thresholds on (|step|, n, s, K) only; the categories overlap by design.
// Requires s <= n and n < K/4.
JumpLabels classify_jump(const Point& step, int n, int s, int K);

class Region {
public:
    enum class Kind { Disc, Annulus, Complement, Union };

    static Region disc(Point center, double n, Geometry g = Geometry::planar());
    static Region annulus(Point center, double n, double s, Geometry g = Geometry::planar());
    static Region complement(Region inner, std::optional<Region> bounding = std::nullopt);
    static Region unite(std::vector<Region> parts);
    // The whole torus: complement of the empty disc.
    static Region whole_torus(int K);

    Kind kind() const { return kind_; }
    const Geometry& geometry() const { return geo_; }
    Point center() const { return center_; }
    double radius_n() const { return n_; }
    double radius_s() const { return s_; }
    const std::vector<Region>& parts() const { return parts_; }

    bool contains(const Point& p) const;

    // Exact lattice point set in deterministic row-major order (x, then y).
    // Toral points come back as primary-copy representatives.
    // Throws UnboundedRegion for a planar complement without a bounding region.
    std::vector<Point> enumerate() const;

    std::string describe() const;

private:
    Region() = default;
    Kind kind_ = Kind::Disc;
    Point center_{};
    double n_ = 0, s_ = 0;
    std::vector<Region> parts_;
    Geometry geo_;
};

} // namespace rwpt
