// SPDX-License-Identifier: Apache-2.0
#include "pmdice/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace pmdice {

namespace {

void push_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

std::uint32_t read_u32le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::vector<std::uint8_t> tnsr_header(int dtype, const Dims& dims) {
    if (dims.size() < 2 || dims.size() > 4)
        throw FormatError("tnsr: bad rank (writable ranks are 2..4)");
    std::vector<std::uint8_t> out = {'T', 'N', 'S', 'R', 1, static_cast<std::uint8_t>(dtype),
                                     static_cast<std::uint8_t>(dims.size()), 0};
    for (const auto d : dims) {
        if (d == 0 || d > 0xffffffffu) throw FormatError("tnsr: bad dims");
        push_u32le(out, static_cast<std::uint32_t>(d));
    }
    return out;
}

}  // namespace

std::vector<std::uint8_t> write_tnsr(const ScalarField& field) {
    std::vector<std::uint8_t> out = tnsr_header(1, field.dims);
    out.reserve(out.size() + field.size() * 4);
    for (std::size_t i = 0; i < field.size(); ++i) {
        const auto f = static_cast<float>(field[i]);
        std::uint32_t bits;
        std::memcpy(&bits, &f, 4);
        push_u32le(out, bits);
    }
    return out;
}

std::vector<std::uint8_t> write_tnsr(const LabelField& labels) {
    std::vector<std::uint8_t> out = tnsr_header(2, labels.dims);
    out.reserve(out.size() + labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int v = labels[i];
        if (v < 0 || v > 255) throw FormatError("tnsr: label outside uint8 range");
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

Tnsr read_tnsr(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 8) throw FormatError("tnsr: truncated header");
    if (std::memcmp(bytes.data(), "TNSR", 4) != 0) throw FormatError("tnsr: bad magic");
    if (bytes[4] != 1) throw FormatError("tnsr: bad version");
    const int dtype = bytes[5];
    if (dtype != 1 && dtype != 2) throw FormatError("tnsr: bad dtype");
    const int rank = bytes[6];
    if (rank < 2 || rank > 4) throw FormatError("tnsr: bad rank");
    if (bytes[7] != 0) throw FormatError("tnsr: bad pad");
    const std::size_t header = 8 + 4 * static_cast<std::size_t>(rank);
    if (bytes.size() < header) throw FormatError("tnsr: truncated dims");

    Tnsr t;
    t.dtype = dtype;
    std::size_t count = 1;
    for (int a = 0; a < rank; ++a) {
        const std::uint32_t d = read_u32le(bytes.data() + 8 + 4 * a);
        if (d == 0) throw FormatError("tnsr: bad dims");
        t.dims.push_back(d);
        count *= d;
    }
    const std::size_t elem = dtype == 1 ? 4 : 1;
    if (bytes.size() != header + count * elem) throw FormatError("tnsr: truncated payload");

    if (dtype == 1) {
        t.f32.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint32_t bits = read_u32le(bytes.data() + header + 4 * i);
            float f;
            std::memcpy(&f, &bits, 4);
            t.f32[i] = f;
        }
    } else {
        t.u8.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header), bytes.end());
    }
    return t;
}

ScalarField as_scalar(const Tnsr& t) {
    if (t.dtype != 1) throw FormatError("tnsr: expected float32 payload");
    ScalarField out(t.dims, 0.0);
    for (std::size_t i = 0; i < t.f32.size(); ++i) out[i] = t.f32[i];
    return out;
}

LabelField as_labels(const Tnsr& t) {
    if (t.dtype != 2) throw FormatError("tnsr: expected uint8 payload");
    LabelField out(t.dims, 0);
    for (std::size_t i = 0; i < t.u8.size(); ++i) out[i] = t.u8[i];
    return out;
}

namespace {

std::vector<std::uint8_t> pgm_bytes(const Dims& dims, const std::vector<std::uint8_t>& raw) {
    if (dims.size() != 2) throw FormatError("pgm: only 2D fields are writable");
    const std::string header =
        "P5\n" + std::to_string(dims[1]) + " " + std::to_string(dims[0]) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), raw.begin(), raw.end());
    return out;
}

struct PgmParse {
    std::size_t width = 0, height = 0, maxval = 0;
    std::size_t payload = 0;  // offset of the first pixel byte
};

PgmParse parse_pgm_header(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw FormatError("pgm: not a PGM file");
    if (bytes[1] != '5')
        throw FormatError("pgm: unsupported format (only binary P5)");
    std::size_t pos = 2;
    const auto next_token = [&]() -> std::size_t {
        for (;;) {
            while (pos < bytes.size() && std::isspace(bytes[pos])) ++pos;
            if (pos < bytes.size() && bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        if (pos >= bytes.size()) throw FormatError("pgm: truncated header");
        std::size_t value = 0;
        bool any = false;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            value = value * 10 + static_cast<std::size_t>(bytes[pos] - '0');
            ++pos;
            any = true;
        }
        if (!any) throw FormatError("pgm: malformed header");
        return value;
    };
    PgmParse h;
    h.width = next_token();
    h.height = next_token();
    h.maxval = next_token();
    if (h.maxval == 0 || h.maxval > 255)
        throw FormatError("pgm: unsupported format (maxval must be 1..255)");
    if (pos >= bytes.size() || !std::isspace(bytes[pos]))
        throw FormatError("pgm: malformed header");
    h.payload = pos + 1;
    if (bytes.size() != h.payload + h.width * h.height) throw FormatError("pgm: truncated payload");
    return h;
}

}  // namespace

std::vector<std::uint8_t> write_pgm(const LabelField& labels) {
    std::vector<std::uint8_t> raw(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int v = labels[i];
        if (v < 0 || v > 255) throw FormatError("pgm: label outside uint8 range");
        raw[i] = static_cast<std::uint8_t>(v);
    }
    return pgm_bytes(labels.dims, raw);
}

std::vector<std::uint8_t> write_pgm_intensity(const ScalarField& img) {
    std::vector<std::uint8_t> raw(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double v = std::clamp(img[i], 0.0, 1.0);
        raw[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
    return pgm_bytes(img.dims, raw);
}

LabelField read_pgm_labels(const std::vector<std::uint8_t>& bytes) {
    const PgmParse h = parse_pgm_header(bytes);
    LabelField out({h.height, h.width});
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = bytes[h.payload + i];
    return out;
}

ScalarField read_pgm_intensity(const std::vector<std::uint8_t>& bytes) {
    const PgmParse h = parse_pgm_header(bytes);
    ScalarField out({h.height, h.width});
    const double scale = 1.0 / static_cast<double>(h.maxval);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = bytes[h.payload + i] * scale;
    return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw FormatError("cannot read file: " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open file for writing: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("cannot write file: " + path);
}

void write_text_file(const std::string& path, const std::string& text) {
    write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

std::string format_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace pmdice
