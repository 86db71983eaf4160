#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace saas::zip {

struct Entry {
    std::string name;
    std::string bytes;
};

// Reads all file entries of a ZIP container (stored and deflate methods),
// in central-directory order. Throws Error(NotAnArchive) when the bytes are
// not a ZIP file, Error(Io) on a corrupt one.
std::vector<Entry> read_archive(std::string_view bytes);

}  // namespace saas::zip
