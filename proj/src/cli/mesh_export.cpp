#include <algorithm>
#include <sstream>

#include "jenga/cli.hpp"

namespace jenga {

namespace {

std::vector<std::array<int, 4>> ordered_faces(const SurfaceComplex& s) {
  std::vector<std::array<int, 4>> faces;
  faces.reserve(s.faces.size());
  for (const Face& f : s.faces) {
    std::array<int, 4> v = f.vertices;
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    faces.push_back(v);
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::pair<int, int> quad_normal(const std::array<Point3, 4>& q) {
  const Point3 u{q[1].x - q[0].x, q[1].y - q[0].y, q[1].z - q[0].z};
  const Point3 w{q[2].x - q[1].x, q[2].y - q[1].y, q[2].z - q[1].z};
  const int nx = u.y * w.z - u.z * w.y;
  const int ny = u.z * w.x - u.x * w.z;
  const int nz = u.x * w.y - u.y * w.x;
  if (nx != 0 && ny == 0 && nz == 0) return {0, nx > 0 ? 1 : -1};
  if (ny != 0 && nx == 0 && nz == 0) return {1, ny > 0 ? 1 : -1};
  if (nz != 0 && nx == 0 && ny == 0) return {2, nz > 0 ? 1 : -1};
  throw Error(ErrorCode::InvalidSurface, "mesh face is not an axis-aligned quad");
}

}  // namespace

std::string export_mesh(const SurfaceComplex& s, MeshFormat format) {
  if (s.faces.empty() || !validate_closed_surface(s).is_closed_surface) {
    throw Error(ErrorCode::InvalidSurface, "only closed surfaces can be exported");
  }
  const std::vector<std::array<int, 4>> faces = ordered_faces(s);
  std::ostringstream out;
  if (format == MeshFormat::Obj) {
    for (const Vertex& v : s.vertices) {
      out << "v " << v.position.x << ' ' << v.position.y << ' ' << v.position.z << '\n';
    }
    for (const auto& f : faces) {
      out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
    }
  } else {
    out << "OFF\n"
        << s.vertices.size() << ' ' << faces.size() << ' ' << s.edges.size() << '\n';
    for (const Vertex& v : s.vertices) {
      out << v.position.x << ' ' << v.position.y << ' ' << v.position.z << '\n';
    }
    for (const auto& f : faces) {
      out << "4 " << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
    }
  }
  return out.str();
}

SurfaceComplex import_mesh(std::string_view text, MeshFormat format) {
  std::istringstream in{std::string(text)};
  std::vector<Point3> points;
  std::vector<std::array<int, 4>> faces;
  auto bad = [](const std::string& what) {
    return Error(ErrorCode::MalformedHeader, "malformed mesh: " + what);
  };

  if (format == MeshFormat::Obj) {
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string tag;
      if (!(row >> tag) || tag[0] == '#') continue;
      if (tag == "v") {
        Point3 p;
        if (!(row >> p.x >> p.y >> p.z)) throw bad("vertex line");
        points.push_back(p);
      } else if (tag == "f") {
        std::array<int, 4> f{};
        for (int& i : f) {
          if (!(row >> i)) throw bad("face line");
          --i;
        }
        faces.push_back(f);
      }
    }
  } else {
    std::string header;
    std::size_t nv = 0, nf = 0, ne = 0;
    if (!(in >> header) || header != "OFF" || !(in >> nv >> nf >> ne)) throw bad("header");
    points.resize(nv);
    for (Point3& p : points) {
      if (!(in >> p.x >> p.y >> p.z)) throw bad("vertex");
    }
    faces.resize(nf);
    for (auto& f : faces) {
      int corners = 0;
      if (!(in >> corners) || corners != 4) throw bad("face");
      for (int& i : f) {
        if (!(in >> i)) throw bad("face");
      }
    }
  }

  std::vector<std::array<Point3, 4>> quads;
  std::vector<std::pair<int, int>> normals;
  for (const auto& f : faces) {
    std::array<Point3, 4> q;
    for (int j = 0; j < 4; ++j) {
      if (f[j] < 0 || static_cast<std::size_t>(f[j]) >= points.size()) {
        throw bad("vertex index out of range");
      }
      q[j] = points[static_cast<std::size_t>(f[j])];
    }
    quads.push_back(q);
    normals.push_back(quad_normal(q));
  }
  return complex_from_quads(quads, normals);
}

}  // namespace jenga
