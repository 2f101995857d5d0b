#include "lpr/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "lpr/error.hpp"

namespace lpr::io {
namespace {

constexpr std::size_t kRecordBytes = 16;  // 4 x float32 per point

std::vector<char> read_all_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

float read_f32le(const char* p) {
  static_assert(sizeof(float) == 4);
  float v;
  std::memcpy(&v, p, 4);
  return v;
}

void write_f32le(std::ostream& out, float v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  out.write(buf, 4);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    const auto begin = cell.find_first_not_of(" \t\r");
    const auto end = cell.find_last_not_of(" \t\r");
    cells.push_back(begin == std::string::npos ? std::string()
                                               : cell.substr(begin, end - begin + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no, const std::string& column) {
  std::size_t consumed = 0;
  double v = 0;
  try {
    v = std::stod(cell, &consumed);
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": cannot parse '" + cell +
                    "' in column " + column);
  }
  if (consumed != cell.size()) {
    throw DataError("line " + std::to_string(line_no) + ": trailing characters in '" + cell +
                    "' in column " + column);
  }
  if (!std::isfinite(v)) {
    throw DataError("line " + std::to_string(line_no) + ": non-finite value in column " + column);
  }
  return v;
}

}  // namespace

PointCloud load_xyzi_binary(const std::filesystem::path& path) {
  const std::vector<char> bytes = read_all_bytes(path);
  if (bytes.empty()) throw EmptyError("'" + path.string() + "' holds zero points");
  if (bytes.size() % kRecordBytes != 0) {
    throw FormatError("'" + path.string() + "': length " + std::to_string(bytes.size()) +
                      " is not a multiple of " + std::to_string(kRecordBytes));
  }

  const std::size_t n = bytes.size() / kRecordBytes;
  PointCloud cloud;
  cloud.source_id = path.stem().string();
  cloud.frame = Frame::cartesian;
  cloud.points.reserve(n);
  std::vector<double> intensity;
  intensity.reserve(n);

  double max_abs_coord = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const char* rec = bytes.data() + i * kRecordBytes;
    const float x = read_f32le(rec);
    const float y = read_f32le(rec + 4);
    const float z = read_f32le(rec + 8);
    const float w = read_f32le(rec + 12);
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z) || !std::isfinite(w)) {
      throw DataError("'" + path.string() + "': non-finite value at point " + std::to_string(i));
    }
    cloud.points.push_back({x, y, z});
    intensity.push_back(w);
    max_abs_coord = std::max({max_abs_coord, std::abs(double(x)), std::abs(double(y)),
                              std::abs(double(z))});
  }
  cloud.intensity = std::move(intensity);
  cloud.metadata["coord_convention"] = max_abs_coord <= 1.0 + 1e-9 ? "unit_cube" : "metric";
  return cloud;
}

void write_xyzi_binary(const std::filesystem::path& path, const PointCloud& cloud) {
  cloud.validate();
  if (cloud.frame != Frame::cartesian) {
    throw FrameError("xyzi writer expects a cartesian cloud, got spherical");
  }
  if (!cloud.has_intensity()) {
    throw DataError("xyzi writer needs intensity for '" + cloud.source_id + "'");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const Vec3& p = cloud.points[i];
    write_f32le(out, static_cast<float>(p.x));
    write_f32le(out, static_cast<float>(p.y));
    write_f32le(out, static_cast<float>(p.z));
    write_f32le(out, static_cast<float>((*cloud.intensity)[i]));
  }
}

PointCloud load_csv_cloud(const std::filesystem::path& path, const CsvColumns& columns) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line)) throw FormatError("'" + path.string() + "': missing header row");
  const std::vector<std::string> header = split_csv_line(line);

  auto column_index = [&](const std::string& name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };

  const auto ix = column_index(columns.x);
  const auto iy = column_index(columns.y);
  const auto iz = column_index(columns.z);
  if (!ix || !iy || !iz) {
    throw FormatError("'" + path.string() + "': header must name columns " + columns.x + "," +
                      columns.y + "," + columns.z);
  }
  const auto ii = column_index(columns.intensity);

  PointCloud cloud;
  cloud.source_id = path.stem().string();
  cloud.frame = Frame::cartesian;
  std::vector<double> intensity;

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    const std::size_t needed = std::max({*ix, *iy, *iz, ii.value_or(0)});
    if (cells.size() <= needed) {
      throw DataError("line " + std::to_string(line_no) + ": expected at least " +
                      std::to_string(needed + 1) + " cells, got " + std::to_string(cells.size()));
    }
    Vec3 p;
    p.x = parse_cell(cells[*ix], line_no, columns.x);
    p.y = parse_cell(cells[*iy], line_no, columns.y);
    p.z = parse_cell(cells[*iz], line_no, columns.z);
    cloud.points.push_back(p);
    if (ii) intensity.push_back(parse_cell(cells[*ii], line_no, columns.intensity));
  }
  if (cloud.points.empty()) throw EmptyError("'" + path.string() + "' holds zero points");
  if (ii) cloud.intensity = std::move(intensity);
  return cloud;
}

std::vector<Pose> load_pose_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line)) throw FormatError("'" + path.string() + "': missing header row");
  const std::vector<std::string> header = split_csv_line(line);

  auto need = [&](const std::string& name) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw FormatError("'" + path.string() + "': pose header must name column " + name);
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t c_id = need("source_id");
  const std::size_t c_ts = need("timestamp");
  const std::size_t c_x = need("x");
  const std::size_t c_y = need("y");
  const auto it_z = std::find(header.begin(), header.end(), "z");
  const std::optional<std::size_t> c_z =
      it_z == header.end() ? std::nullopt
                           : std::optional<std::size_t>(it_z - header.begin());

  std::vector<Pose> poses;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    const std::size_t needed = std::max({c_id, c_ts, c_x, c_y, c_z.value_or(0)});
    if (cells.size() <= needed) {
      throw DataError("line " + std::to_string(line_no) + ": short pose row");
    }
    Pose pose;
    pose.source_id = cells[c_id];
    pose.timestamp = parse_cell(cells[c_ts], line_no, "timestamp");
    pose.x = parse_cell(cells[c_x], line_no, "x");
    pose.y = parse_cell(cells[c_y], line_no, "y");
    if (c_z && !cells[*c_z].empty()) pose.z = parse_cell(cells[*c_z], line_no, "z");
    poses.push_back(std::move(pose));
  }
  return poses;
}

std::unordered_map<std::string, Pose> pose_index(const std::vector<Pose>& poses) {
  std::unordered_map<std::string, Pose> index;
  index.reserve(poses.size());
  for (const Pose& pose : poses) {
    if (!index.emplace(pose.source_id, pose).second) {
      throw DataError("duplicate pose for source_id '" + pose.source_id + "'");
    }
  }
  return index;
}

}  // namespace lpr::io
