/*
   Copyright 2026 The shardbench Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "shardbench/md5.hpp"

#include <gtest/gtest.h>
#include <openssl/evp.h>

#include <random>
#include <string>

#include "shardbench/error.hpp"

namespace shardbench {
namespace {

// Independent digest via libcrypto, used only as a cross-check.
std::string openssl_md5_hex(std::string_view data) {
    unsigned char out[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), out, &len, EVP_md5(), nullptr);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex.push_back(kHex[out[i] >> 4]);
        hex.push_back(kHex[out[i] & 0xf]);
    }
    return hex;
}

TEST(Md5, Rfc1321AppendixVectors) {
    struct Vector {
        const char* input;
        const char* digest;
    };
    const Vector vectors[] = {
        {"", "d41d8cd98f00b204e9800998ecf8427e"},
        {"a", "0cc175b9c0f1b6a831c399e269772661"},
        {"abc", "900150983cd24fb0d6963f7d28e17f72"},
        {"message digest", "f96b697d7cb7938d525a2f31aaf161d0"},
        {"abcdefghijklmnopqrstuvwxyz", "c3fcd3d76192e4007dfb496cca67e13b"},
        {"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789",
         "d174ab98d277d9f5a5611c2c9f419d9f"},
        {"12345678901234567890123456789012345678901234567890123456789012345678901234567890",
         "57edf4a22be3c955ac49da2e2107b67a"},
    };
    for (const auto& v : vectors) EXPECT_EQ(md5_hex(v.input).str(), v.digest) << v.input;
}

TEST(Md5, IncrementalMatchesOneShot) {
    std::string data(1000, '\0');
    std::mt19937 rng(3);
    for (auto& c : data) c = static_cast<char>(rng());
    for (std::size_t split : {0u, 1u, 55u, 56u, 63u, 64u, 65u, 127u, 500u, 1000u}) {
        Md5 md5;
        md5.update(std::string_view(data).substr(0, split));
        md5.update(std::string_view(data).substr(split));
        EXPECT_EQ(HexDigest::from_bytes(md5.digest()), md5_hex(data)) << split;
    }
}

TEST(Md5, AgreesWithLibcryptoAcrossLengths) {
    std::mt19937 rng(17);
    for (std::size_t len = 0; len < 300; ++len) {
        std::string data(len, '\0');
        for (auto& c : data) c = static_cast<char>(rng());
        EXPECT_EQ(md5_hex(data).str(), openssl_md5_hex(data)) << len;
    }
}

TEST(HexDigest, PairValues) {
    HexDigest d("d268c8fe7f154537c2c9ed60a0b8f2fd");
    EXPECT_EQ(d.pair_value(0), 210u);
    EXPECT_EQ(d.pair_value(1), 104u);
    EXPECT_EQ(d.pair_value(2), 200u);
    EXPECT_EQ(d.pair_value(15), 0xfdu);
    EXPECT_EQ(HexDigest(std::string(32, '0')).pair_value(0), 0u);
    EXPECT_THROW(d.pair_value(16), Error);
}

TEST(HexDigest, ValidatesShape) {
    EXPECT_THROW(HexDigest("abc"), Error);
    EXPECT_THROW(HexDigest("D268C8FE7F154537C2C9ED60A0B8F2FD"), Error);
    EXPECT_THROW(HexDigest("g268c8fe7f154537c2c9ed60a0b8f2fd"), Error);
}

}  // namespace
}  // namespace shardbench
