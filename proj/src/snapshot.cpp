#include "exmhd/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace exmhd {

namespace {

constexpr char kMagic[6] = {'N', 'F', 'R', 'M', '1', '\0'};
constexpr std::uint8_t kStateTag = 0xFF;

void put_u32(std::string& buf, std::uint32_t v) {
  for (int s = 0; s < 4; ++s) buf.push_back(static_cast<char>((v >> (8 * s)) & 0xFF));
}

void put_f64(std::string& buf, double x) {
  std::uint64_t v = std::bit_cast<std::uint64_t>(x);
  for (int s = 0; s < 8; ++s) buf.push_back(static_cast<char>((v >> (8 * s)) & 0xFF));
}

void put_field(std::string& buf, const ScalarField& f) {
  for (double x : f.v) put_f64(buf, x);
}

std::string header(const BoxSpec& box, std::uint8_t degree_tag, double t) {
  std::string buf(kMagic, sizeof(kMagic));
  buf.push_back(static_cast<char>(box.n));
  buf.push_back(static_cast<char>(degree_tag));
  buf.push_back('\0');  // flags, reserved
  for (int a = 0; a < box.n; ++a) put_u32(buf, static_cast<std::uint32_t>(box.dims[a]));
  for (int a = 0; a < box.n; ++a) put_f64(buf, box.lengths[a]);
  for (int a = 0; a < box.n; ++a) put_f64(buf, box.metric[a]);
  put_f64(buf, t);
  return buf;
}

void write_file(const std::string& path, const std::string& buf) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SnapshotError("snapshot: cannot open " + path + " for writing");
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw SnapshotError("snapshot: short write to " + path);
}

struct Reader {
  std::string data;
  std::size_t pos = 0;
  std::string path;

  void need(std::size_t count) const {
    if (pos + count > data.size())
      throw SnapshotError("snapshot: " + path + " is truncated");
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data[pos++]);
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int s = 0; s < 4; ++s)
      v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(data[pos++])) << (8 * s);
    return v;
  }
  double f64() {
    need(8);
    std::uint64_t v = 0;
    for (int s = 0; s < 8; ++s)
      v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data[pos++])) << (8 * s);
    return std::bit_cast<double>(v);
  }
  void field(ScalarField& f) {
    need(8 * f.v.size());
    for (double& x : f.v) x = f64();
  }
};

}  // namespace

void write_snapshot(const std::string& path, const KForm& form, double t) {
  std::string buf = header(form.box, static_cast<std::uint8_t>(form.degree), t);
  for (const auto& c : form.comp) put_field(buf, c);
  write_file(path, buf);
}

void write_snapshot(const std::string& path, const MhdState& state) {
  std::string buf = header(state.rho.box, kStateTag, state.t);
  put_field(buf, state.rho);
  for (const auto& c : state.u.comp) put_field(buf, c);
  for (const auto& c : state.A.comp) put_field(buf, c);
  write_file(path, buf);
}

Snapshot read_snapshot(const std::string& path) {
  Reader r;
  r.path = path;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SnapshotError("snapshot: cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    r.data = text.str();
  }

  r.need(sizeof(kMagic));
  if (std::memcmp(r.data.data(), kMagic, sizeof(kMagic)) != 0)
    throw SnapshotError("snapshot: " + path + " has a bad magic");
  r.pos = sizeof(kMagic);

  int n = r.u8();
  std::uint8_t degree_tag = r.u8();
  r.u8();  // flags, ignored

  std::vector<int> dims;
  for (int a = 0; a < n; ++a) dims.push_back(static_cast<int>(r.u32()));
  std::vector<double> lengths, metric;
  for (int a = 0; a < n; ++a) lengths.push_back(r.f64());
  for (int a = 0; a < n; ++a) metric.push_back(r.f64());
  double t = r.f64();

  BoxSpec box;
  try {
    box = build_box(n, dims, lengths, metric);
  } catch (const std::invalid_argument& e) {
    throw SnapshotError("snapshot: " + path + " header is invalid: " + e.what());
  }

  Snapshot out;
  out.t = t;
  if (degree_tag == kStateTag) {
    MhdState s;
    s.t = t;
    s.rho = make_field(box);
    s.u = make_kform(box, 1);
    s.A = make_kform(box, 1);
    r.field(s.rho);
    for (auto& c : s.u.comp) r.field(c);
    for (auto& c : s.A.comp) r.field(c);
    out.state = std::move(s);
  } else {
    if (degree_tag > static_cast<std::uint8_t>(n))
      throw SnapshotError("snapshot: " + path + " declares degree above the dimension");
    KForm f = make_kform(box, degree_tag);
    for (auto& c : f.comp) r.field(c);
    out.form = std::move(f);
  }
  if (r.pos != r.data.size())
    throw SnapshotError("snapshot: " + path + " has trailing bytes");
  return out;
}

}  // namespace exmhd
