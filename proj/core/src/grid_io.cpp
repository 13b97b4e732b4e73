#include <axikernel/grid_io.hpp>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <axikernel/errors.hpp>

namespace axikernel {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == '\n' || c == '\r') c = ' ';
    return out;
}

void write_axis(std::ostream& os, const char* name, const std::vector<double>& axis) {
    os << "# " << name << ":";
    for (double v : axis) os << ' ' << fmt(v);
    os << '\n';
}

void write_preamble(std::ostream& os, const char* kind, const std::vector<double>& r_axis,
                    const std::vector<double>& z_axis, const std::string& provenance,
                    bool stamp) {
    os << "# axikernel grid v1\n";
    os << "# kind: " << kind << '\n';
    os << "# provenance: " << sanitize(provenance) << '\n';
    if (stamp) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        os << "# written: " << buf << '\n';
    }
    write_axis(os, "r_axis", r_axis);
    write_axis(os, "z_axis", z_axis);
}

struct Parser {
    std::ifstream in;
    std::string path;
    long line_no = 0;

    explicit Parser(const std::filesystem::path& p) : in(p), path(p.string()) {
        if (!in) throw data_error(path + ": cannot open for reading");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw data_error(path + ":" + std::to_string(line_no) + ": " + msg);
    }

    bool next_line(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    }

    double parse_double(const std::string& token) {
        const char* begin = token.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0') fail("malformed number '" + token + "'");
        return v;
    }

    std::vector<double> parse_axis(const std::string& rest) {
        std::istringstream ss(rest);
        std::vector<double> axis;
        std::string tok;
        while (ss >> tok) axis.push_back(parse_double(tok));
        if (axis.empty()) fail("empty axis");
        return axis;
    }
};

struct Header {
    std::string kind;
    std::string quantity = "generic";
    std::string provenance;
    std::vector<double> r_axis;
    std::vector<double> z_axis;
    std::string column_row;
};

Header read_header(Parser& p) {
    Header h;
    std::string line;
    while (p.next_line(line)) {
        if (line.empty()) continue;
        if (line[0] != '#') {
            h.column_row = line;
            break;
        }
        std::string body = line.substr(1);
        const auto colon = body.find(':');
        if (colon == std::string::npos) continue;
        std::string key = body.substr(0, colon);
        std::string rest = body.substr(colon + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.pop_back();
        };
        trim(key);
        trim(rest);
        if (key == "kind") h.kind = rest;
        else if (key == "quantity") h.quantity = rest;
        else if (key == "provenance") h.provenance = rest;
        else if (key == "r_axis") h.r_axis = p.parse_axis(rest);
        else if (key == "z_axis") h.z_axis = p.parse_axis(rest);
    }
    if (h.column_row.empty()) p.fail("missing column header row");
    if (h.r_axis.empty() || h.z_axis.empty()) p.fail("missing r_axis/z_axis declaration");
    return h;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

void write_scalar_field_csv(const std::filesystem::path& path, const MeridianScalarField& f,
                            bool stamp) {
    f.validate();
    std::ofstream os(path);
    if (!os) throw data_error(path.string() + ": cannot open for writing");
    write_preamble(os, "scalar", f.r_axis, f.z_axis, f.provenance, stamp);
    os << "# quantity: " << to_string(f.quantity) << '\n';
    os << "r,z,value\n";
    for (std::size_t i = 0; i < f.nr(); ++i)
        for (std::size_t j = 0; j < f.nz(); ++j)
            os << fmt(f.r_axis[i]) << ',' << fmt(f.z_axis[j]) << ',' << fmt(f.at(i, j))
               << '\n';
    if (!os) throw data_error(path.string() + ": write failed");
}

MeridianScalarField read_scalar_field_csv(const std::filesystem::path& path) {
    Parser p(path);
    Header h = read_header(p);
    if (h.kind != "scalar") p.fail("expected a scalar grid file, got kind '" + h.kind + "'");
    if (h.column_row != "r,z,value") p.fail("expected column header 'r,z,value'");

    MeridianScalarField f;
    f.r_axis = h.r_axis;
    f.z_axis = h.z_axis;
    f.quantity = field_quantity_from_string(h.quantity);
    f.provenance = h.provenance;
    f.values.resize(f.nr() * f.nz());

    std::string line;
    std::size_t row = 0;
    const std::size_t expected = f.nr() * f.nz();
    while (p.next_line(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (row >= expected) p.fail("more data rows than grid points");
        const auto cols = split_csv(line);
        if (cols.size() != 3) p.fail("expected 3 columns");
        const double r = p.parse_double(cols[0]);
        const double z = p.parse_double(cols[1]);
        const std::size_t i = row / f.nz();
        const std::size_t j = row % f.nz();
        if (r != f.r_axis[i] || z != f.z_axis[j])
            p.fail("row coordinates do not match the declared row-major grid order");
        f.values[row] = p.parse_double(cols[2]);
        ++row;
    }
    if (row != expected)
        throw data_error(path.string() + ": expected " + std::to_string(expected) +
                         " data rows, found " + std::to_string(row));
    f.validate();
    return f;
}

void write_velocity_field_csv(const std::filesystem::path& path,
                              const MeridianVelocityField& f, bool stamp) {
    f.validate();
    std::ofstream os(path);
    if (!os) throw data_error(path.string() + ": cannot open for writing");
    write_preamble(os, "velocity", f.r_axis, f.z_axis, f.provenance, stamp);
    os << "r,z,u_r,u_z\n";
    for (std::size_t i = 0; i < f.nr(); ++i)
        for (std::size_t j = 0; j < f.nz(); ++j)
            os << fmt(f.r_axis[i]) << ',' << fmt(f.z_axis[j]) << ',' << fmt(f.ur_at(i, j))
               << ',' << fmt(f.uz_at(i, j)) << '\n';
    if (!os) throw data_error(path.string() + ": write failed");
}

MeridianVelocityField read_velocity_field_csv(const std::filesystem::path& path) {
    Parser p(path);
    Header h = read_header(p);
    if (h.kind != "velocity")
        p.fail("expected a velocity grid file, got kind '" + h.kind + "'");
    if (h.column_row != "r,z,u_r,u_z") p.fail("expected column header 'r,z,u_r,u_z'");

    MeridianVelocityField f;
    f.r_axis = h.r_axis;
    f.z_axis = h.z_axis;
    f.provenance = h.provenance;
    f.u_r.resize(f.nr() * f.nz());
    f.u_z.resize(f.nr() * f.nz());

    std::string line;
    std::size_t row = 0;
    const std::size_t expected = f.nr() * f.nz();
    while (p.next_line(line)) {
        if (line.empty() || line[0] == '#') continue;
        if (row >= expected) p.fail("more data rows than grid points");
        const auto cols = split_csv(line);
        if (cols.size() != 4) p.fail("expected 4 columns");
        const double r = p.parse_double(cols[0]);
        const double z = p.parse_double(cols[1]);
        const std::size_t i = row / f.nz();
        const std::size_t j = row % f.nz();
        if (r != f.r_axis[i] || z != f.z_axis[j])
            p.fail("row coordinates do not match the declared row-major grid order");
        f.u_r[row] = p.parse_double(cols[2]);
        f.u_z[row] = p.parse_double(cols[3]);
        ++row;
    }
    if (row != expected)
        throw data_error(path.string() + ": expected " + std::to_string(expected) +
                         " data rows, found " + std::to_string(row));
    f.validate();
    return f;
}

} // namespace axikernel
