#include "zip/reader.hpp"

#include <zlib.h>

#include <cstdint>
#include <cstring>

#include "support/error.hpp"

namespace saas::zip {

namespace {

constexpr std::uint32_t kEocdSig = 0x06054b50;
constexpr std::uint32_t kCentralSig = 0x02014b50;
constexpr std::uint32_t kLocalSig = 0x04034b50;

std::uint16_t read_u16(std::string_view b, std::size_t off) {
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[off]) |
                                      (static_cast<unsigned char>(b[off + 1]) << 8));
}

std::uint32_t read_u32(std::string_view b, std::size_t off) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(b[off])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 3])) << 24);
}

std::string inflate_raw(std::string_view in, std::size_t expected_size) {
    std::string out(expected_size, '\0');
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    // negative window bits: raw deflate stream, as stored in ZIP entries
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) {
        throw Error(ErrorCode::Internal, "inflateInit2 failed");
    }
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || zs.total_out != expected_size) {
        throw Error(ErrorCode::Io, "corrupt deflate stream in archive entry");
    }
    return out;
}

}  // namespace

std::vector<Entry> read_archive(std::string_view bytes) {
    // End-of-central-directory record: 22 bytes minimum plus a comment of up
    // to 64 KiB; scan backwards for the signature.
    if (bytes.size() < 22 || read_u32(bytes, 0) != kLocalSig) {
        // Empty archives start with the EOCD signature instead.
        if (bytes.size() < 22 || read_u32(bytes, 0) != kEocdSig) {
            throw Error(ErrorCode::NotAnArchive, "not a ZIP archive");
        }
    }
    std::size_t scan_start = bytes.size() - 22;
    std::size_t limit = bytes.size() > 22 + 65535 ? bytes.size() - 22 - 65535 : 0;
    std::size_t eocd = std::string_view::npos;
    for (std::size_t i = scan_start + 1; i-- > limit;) {
        if (read_u32(bytes, i) == kEocdSig) {
            eocd = i;
            break;
        }
    }
    if (eocd == std::string_view::npos) {
        throw Error(ErrorCode::NotAnArchive, "missing end-of-central-directory record");
    }

    std::uint16_t entry_count = read_u16(bytes, eocd + 10);
    std::uint32_t cd_offset = read_u32(bytes, eocd + 16);
    if (cd_offset > bytes.size()) throw Error(ErrorCode::Io, "central directory out of range");

    std::vector<Entry> entries;
    std::size_t pos = cd_offset;
    for (std::uint16_t i = 0; i < entry_count; ++i) {
        if (pos + 46 > bytes.size() || read_u32(bytes, pos) != kCentralSig) {
            throw Error(ErrorCode::Io, "corrupt central directory");
        }
        std::uint16_t method = read_u16(bytes, pos + 10);
        std::uint32_t comp_size = read_u32(bytes, pos + 20);
        std::uint32_t uncomp_size = read_u32(bytes, pos + 24);
        std::uint16_t name_len = read_u16(bytes, pos + 28);
        std::uint16_t extra_len = read_u16(bytes, pos + 30);
        std::uint16_t comment_len = read_u16(bytes, pos + 32);
        std::uint32_t local_off = read_u32(bytes, pos + 42);
        if (pos + 46 + name_len > bytes.size()) throw Error(ErrorCode::Io, "corrupt entry name");
        std::string name(bytes.substr(pos + 46, name_len));
        pos += 46 + name_len + extra_len + comment_len;

        if (!name.empty() && name.back() == '/') continue;  // directory entry

        if (local_off + 30 > bytes.size() || read_u32(bytes, local_off) != kLocalSig) {
            throw Error(ErrorCode::Io, "corrupt local header for " + name);
        }
        std::uint16_t lname = read_u16(bytes, local_off + 26);
        std::uint16_t lextra = read_u16(bytes, local_off + 28);
        std::size_t data_off = local_off + 30 + lname + lextra;
        if (data_off + comp_size > bytes.size()) {
            throw Error(ErrorCode::Io, "entry data out of range for " + name);
        }
        std::string_view data = bytes.substr(data_off, comp_size);

        Entry e;
        e.name = std::move(name);
        if (method == 0) {
            e.bytes = std::string(data);
        } else if (method == 8) {
            e.bytes = inflate_raw(data, uncomp_size);
        } else {
            throw Error(ErrorCode::Io,
                        "unsupported compression method " + std::to_string(method));
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace saas::zip
