#include "oak/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "container format assumes a little-endian host");

namespace oak {

namespace {

constexpr char kMagic[16] = {'O', 'A', 'K', '-', 'E', 'M', 'B', 'E',
                             'D', 'D', 'I', 'N', 'G', '-', '1', '\n'};

void put_u32(std::string& out, uint32_t v) {
    char b[4];
    std::memcpy(b, &v, 4);
    out.append(b, 4);
}

uint32_t take_u32(const std::vector<uint8_t>& buf, size_t& off, const std::string& path) {
    if (off + 4 > buf.size()) throw std::runtime_error("container: truncated file " + path);
    uint32_t v;
    std::memcpy(&v, buf.data() + off, 4);
    off += 4;
    return v;
}

std::string serialize(const std::vector<double>& rowmajor, uint32_t rows, uint32_t dim) {
    if (rowmajor.size() != static_cast<size_t>(rows) * dim)
        throw std::runtime_error("container: data size does not match rows*dim");
    std::string out;
    out.append(kMagic, sizeof(kMagic));
    put_u32(out, rows);
    put_u32(out, dim);
    for (double d : rowmajor) {
        const float f = static_cast<float>(d);
        char b[4];
        std::memcpy(b, &f, 4);
        out.append(b, 4);
    }
    return out;
}

}  // namespace

void write_embedding_file(const std::string& path, const std::vector<double>& rowmajor,
                          uint32_t rows, uint32_t dim, const std::vector<std::string>& names) {
    std::string out = serialize(rowmajor, rows, dim);
    if (!names.empty()) {
        if (names.size() != rows)
            throw std::runtime_error("container: name table size must equal row count");
        put_u32(out, static_cast<uint32_t>(names.size()));
        for (const std::string& n : names) {
            put_u32(out, static_cast<uint32_t>(n.size()));
            out += n;
        }
    }
    write_file_bytes(path, out.data(), out.size());
}

void write_token_file(const std::string& path, const std::vector<double>& rowmajor,
                      uint32_t rows, uint32_t dim, const std::string& context_id) {
    std::string out = serialize(rowmajor, rows, dim);
    put_u32(out, static_cast<uint32_t>(context_id.size()));
    out += context_id;
    write_file_bytes(path, out.data(), out.size());
}

EmbeddingFile read_embedding_file(const std::string& path, bool expect_trailer) {
    const std::vector<uint8_t> buf = read_file_bytes(path);
    if (buf.size() < 24 || std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("container: bad magic in " + path);
    size_t off = sizeof(kMagic);
    EmbeddingFile f;
    f.rows = take_u32(buf, off, path);
    f.dim = take_u32(buf, off, path);
    const size_t n = static_cast<size_t>(f.rows) * f.dim;
    if (off + 4 * n > buf.size()) throw std::runtime_error("container: truncated data in " + path);
    f.data.resize(n);
    std::memcpy(f.data.data(), buf.data() + off, 4 * n);
    off += 4 * n;
    if (off == buf.size()) return f;

    if (expect_trailer) {
        const uint32_t len = take_u32(buf, off, path);
        if (off + len > buf.size()) throw std::runtime_error("container: truncated trailer in " + path);
        f.trailer.assign(reinterpret_cast<const char*>(buf.data()) + off, len);
        off += len;
    } else {
        const uint32_t count = take_u32(buf, off, path);
        if (count != f.rows) throw std::runtime_error("container: name table count mismatch in " + path);
        f.names.reserve(count);
        for (uint32_t i = 0; i < count; ++i) {
            const uint32_t len = take_u32(buf, off, path);
            if (off + len > buf.size())
                throw std::runtime_error("container: truncated name table in " + path);
            f.names.emplace_back(reinterpret_cast<const char*>(buf.data()) + off, len);
            off += len;
        }
    }
    if (off != buf.size()) throw std::runtime_error("container: trailing bytes in " + path);
    return f;
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    in.seekg(0, std::ios::end);
    const std::streamsize size = in.tellg();
    in.seekg(0, std::ios::beg);
    std::vector<uint8_t> buf(static_cast<size_t>(size));
    if (size > 0 && !in.read(reinterpret_cast<char*>(buf.data()), size))
        throw std::runtime_error("io: short read on " + path);
    return buf;
}

void write_file_bytes(const std::string& path, const void* data, size_t len) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
    if (!out) throw std::runtime_error("io: short write on " + path);
}

}  // namespace oak
