#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oak {

// Self-contained SHA-256 (FIPS 180-4), used to digest frozen backbone weights.
class Sha256 {
public:
    Sha256();

    void update(const void* data, size_t len);
    std::array<uint8_t, 32> finish();

    static std::string hex(const std::array<uint8_t, 32>& digest);
    static std::string hash_hex(const void* data, size_t len);

private:
    void process_block(const uint8_t* block);

    std::array<uint32_t, 8> h_;
    std::array<uint8_t, 64> buffer_;
    uint64_t total_len_ = 0;
    size_t buffer_len_ = 0;
};

}  // namespace oak
