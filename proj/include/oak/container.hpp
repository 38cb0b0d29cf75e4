#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oak {

// Binary embedding container shared by lexicons, centroid dumps, and context
// token files:
//   16-byte magic "OAK-EMBEDDING-1\n"
//   u32 LE row count, u32 LE dim
//   rows*dim float32 LE, row-major
//   optional appendix, either
//     name table: u32 LE count, then per name u32 LE byte length + UTF-8 bytes
//     single trailing string (context token files): u32 LE length + bytes
struct EmbeddingFile {
    uint32_t rows = 0;
    uint32_t dim = 0;
    std::vector<float> data;                // row-major
    std::vector<std::string> names;         // empty unless a name table is present
    std::string trailer;                    // context_id for token files

    std::vector<double> as_doubles() const { return {data.begin(), data.end()}; }
};

void write_embedding_file(const std::string& path, const std::vector<double>& rowmajor,
                          uint32_t rows, uint32_t dim,
                          const std::vector<std::string>& names = {});

void write_token_file(const std::string& path, const std::vector<double>& rowmajor,
                      uint32_t rows, uint32_t dim, const std::string& context_id);

// Reads the container; appendix interpretation is chosen by `expect_trailer`
// (true for token files, false for lexicon-style name tables).
EmbeddingFile read_embedding_file(const std::string& path, bool expect_trailer = false);

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const void* data, size_t len);

}  // namespace oak
