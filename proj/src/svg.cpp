#include "minkarr/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace minkarr::svg {

using geometry::Vec2;

std::string render_decomposition(const arrangement::MuArrangement& arr,
                                 const decomposition::RegionDecomposition& dec) {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_y;
    for (const auto& d : arr.disks) {
        lo_x = std::min(lo_x, d.center.x() - d.radius);
        hi_x = std::max(hi_x, d.center.x() + d.radius);
        lo_y = std::min(lo_y, d.center.y() - d.radius);
        hi_y = std::max(hi_y, d.center.y() + d.radius);
    }
    const double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
    lo_x -= pad;
    lo_y -= pad;
    hi_x += pad;
    hi_y += pad;
    const double width = hi_x - lo_x, height = hi_y - lo_y;
    const double stroke = 0.004 * std::max(width, height);

    std::ostringstream os;
    os << std::setprecision(9);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x << " " << -hi_y
       << " " << width << " " << height << "\" width=\"800\" height=\""
       << 800.0 * height / width << "\">\n";
    os << "<style>\n"
       << ".outer { fill: #ffffff; }\n"
       << ".inner { fill: #d3d3d3; }\n"
       << ".core { fill: #808080; }\n"
       << ".edge { fill: none; stroke: #000000; stroke-width: " << stroke << "; }\n"
       << "</style>\n";
    // flip the y axis so the viewer sees mathematical orientation
    os << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& d : arr.disks)
        os << "<circle class=\"outer\" cx=\"" << d.center.x() << "\" cy=\"" << d.center.y()
           << "\" r=\"" << d.radius << "\"/>\n";
    for (const auto& t : dec.inner.triangles) {
        const Vec2 xi = arr.disks[t.i].center, xj = arr.disks[t.j].center;
        os << "<polygon class=\"inner\" points=\"" << xi.x() << "," << xi.y() << " "
           << xj.x() << "," << xj.y() << " " << t.q.x() << "," << t.q.y() << "\"/>\n";
    }
    for (const auto& p : dec.core.polygons) {
        os << "<polygon class=\"core\" points=\"";
        for (std::size_t k = 0; k < p.vertex_disks.size(); ++k) {
            const Vec2 c = arr.disks[p.vertex_disks[k]].center;
            os << (k ? " " : "") << c.x() << "," << c.y();
        }
        os << "\"/>\n";
    }
    for (const auto& d : arr.disks)
        os << "<circle class=\"edge\" cx=\"" << d.center.x() << "\" cy=\"" << d.center.y()
           << "\" r=\"" << d.radius << "\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace minkarr::svg
