#include "rwpt/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace rwpt {

namespace {
std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

Point project_pi(const Point& p, int K) {
    if (K < 1) throw InvalidArgument("project_pi: K must be >= 1");
    const std::int64_t half = K / 2;
    return {floor_mod(p.x + half, K) - half, floor_mod(p.y + half, K) - half};
}

std::int64_t torus_distance_sq(const Point& a, const Point& b, int K) {
    const Point pa = project_pi(a, K);
    const Point pb = project_pi(b, K);
    std::int64_t best = -1;
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const Point shifted{pb.x + static_cast<std::int64_t>(i) * K,
                                pb.y + static_cast<std::int64_t>(j) * K};
            const std::int64_t d = norm_sq(pa - shifted);
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

double torus_distance(const Point& a, const Point& b, int K) {
    return std::sqrt(static_cast<double>(torus_distance_sq(a, b, K)));
}

JumpLabels classify_jump(const Point& step, int n, int s, int K) {
    if (!(s <= n)) throw InvalidArgument("classify_jump: requires s <= n");
    if (!(4 * static_cast<std::int64_t>(n) < K)) throw InvalidArgument("classify_jump: requires n < K/4");

    const std::int64_t d2 = norm_sq(step);
    JumpLabels out;
    out.baby = d2 < static_cast<std::int64_t>(s) * s;
    out.small = d2 < 4 * static_cast<std::int64_t>(n) * n;
    const std::int64_t wrap = K - 2 * static_cast<std::int64_t>(n);
    out.medium = d2 > static_cast<std::int64_t>(s) * s && d2 < wrap * wrap;
    out.large = d2 > wrap * wrap;
    // targeted(j): j(K-2n) <= |step| <= j(K+2n)/sqrt(2), exact in integers.
    const std::int64_t land = K + 2 * static_cast<std::int64_t>(n);
    for (std::int64_t j = 1; j * j * wrap * wrap <= d2; ++j) {
        if (2 * d2 <= j * j * land * land) out.targeted.push_back(static_cast<int>(j));
    }
    return out;
}

Region Region::disc(Point center, double n, Geometry g) {
    if (n < 0) throw InvalidArgument("disc radius must be >= 0");
    if (g.toral() && !(n < g.K / 4.0))
        throw InvalidArgument("toral disc requires n < K/4");
    Region r;
    r.kind_ = Kind::Disc;
    r.center_ = g.toral() ? project_pi(center, g.K) : center;
    r.n_ = n;
    r.geo_ = g;
    return r;
}

Region Region::annulus(Point center, double n, double s, Geometry g) {
    if (n < 0 || s < 0) throw InvalidArgument("annulus radii must be >= 0");
    if (g.toral() && !(n + s < g.K / 4.0))
        throw InvalidArgument("toral annulus requires n + s < K/4");
    Region r;
    r.kind_ = Kind::Annulus;
    r.center_ = g.toral() ? project_pi(center, g.K) : center;
    r.n_ = n;
    r.s_ = s;
    r.geo_ = g;
    return r;
}

Region Region::complement(Region inner, std::optional<Region> bounding) {
    Region r;
    r.kind_ = Kind::Complement;
    r.geo_ = inner.geo_;
    r.parts_.push_back(std::move(inner));
    if (bounding) {
        if (!(bounding->geo_ == r.geo_))
            throw InvalidArgument("complement bounding region must share geometry");
        r.parts_.push_back(std::move(*bounding));
    }
    return r;
}

Region Region::unite(std::vector<Region> parts) {
    if (parts.empty()) throw InvalidArgument("union of no regions");
    for (const auto& p : parts)
        if (!(p.geometry() == parts.front().geometry()))
            throw InvalidArgument("union parts must share geometry");
    Region r;
    r.kind_ = Kind::Union;
    r.geo_ = parts.front().geometry();
    r.parts_ = std::move(parts);
    return r;
}

Region Region::whole_torus(int K) {
    return complement(disc({0, 0}, 0, Geometry::torus(K)));
}

bool Region::contains(const Point& p) const {
    switch (kind_) {
    case Kind::Disc: {
        if (geo_.toral())
            return torus_distance_sq(p, center_, geo_.K) < n_ * n_;
        return static_cast<double>(norm_sq(p - center_)) < n_ * n_;
    }
    case Kind::Annulus: {
        const double d2 = geo_.toral()
                              ? static_cast<double>(torus_distance_sq(p, center_, geo_.K))
                              : static_cast<double>(norm_sq(p - center_));
        return d2 >= n_ * n_ && d2 < (n_ + s_) * (n_ + s_);
    }
    case Kind::Complement:
        return !parts_[0].contains(p);
    case Kind::Union:
        for (const auto& part : parts_)
            if (part.contains(p)) return true;
        return false;
    }
    return false;
}

std::vector<Point> Region::enumerate() const {
    std::vector<Point> pts;
    switch (kind_) {
    case Kind::Disc:
    case Kind::Annulus: {
        const double outer = kind_ == Kind::Disc ? n_ : n_ + s_;
        const auto rad = static_cast<std::int64_t>(std::ceil(outer));
        for (std::int64_t x = center_.x - rad; x <= center_.x + rad; ++x) {
            for (std::int64_t y = center_.y - rad; y <= center_.y + rad; ++y) {
                const Point p{x, y};
                const double d2 = static_cast<double>(norm_sq(p - center_));
                const bool in = kind_ == Kind::Disc ? d2 < n_ * n_
                                                    : (d2 >= n_ * n_ && d2 < outer * outer);
                if (in) pts.push_back(geo_.toral() ? project_pi(p, geo_.K) : p);
            }
        }
        break;
    }
    case Kind::Complement: {
        if (geo_.toral()) {
            const int K = geo_.K;
            const std::int64_t lo = -(K / 2);
            for (std::int64_t x = lo; x < lo + K; ++x)
                for (std::int64_t y = lo; y < lo + K; ++y)
                    if (!parts_[0].contains({x, y})) pts.push_back({x, y});
        } else {
            if (parts_.size() < 2)
                throw UnboundedRegion("planar complement needs an explicit bounding region");
            for (const Point& p : parts_[1].enumerate())
                if (!parts_[0].contains(p)) pts.push_back(p);
        }
        break;
    }
    case Kind::Union: {
        for (const auto& part : parts_) {
            auto sub = part.enumerate();
            pts.insert(pts.end(), sub.begin(), sub.end());
        }
        break;
    }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::string Region::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Disc:
        os << "disc((" << center_.x << "," << center_.y << "), " << n_ << ")";
        break;
    case Kind::Annulus:
        os << "annulus((" << center_.x << "," << center_.y << "), " << n_ << ", " << s_ << ")";
        break;
    case Kind::Complement:
        os << "complement(" << parts_[0].describe();
        if (parts_.size() > 1) os << " in " << parts_[1].describe();
        os << ")";
        break;
    case Kind::Union: {
        os << "union(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            os << (i ? ", " : "") << parts_[i].describe();
        os << ")";
        break;
    }
    }
    if (geo_.toral()) os << " on Z^2_" << geo_.K;
    return os.str();
}

} // namespace rwpt
