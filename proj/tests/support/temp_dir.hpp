#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace testsupport {

// Scratch directory that cleans up after itself.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() /
               ("spikegraph-test-" + std::to_string(rd()) + "-" +
                std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path file(const std::string& name) const {
        return path / name;
    }

    std::filesystem::path write(const std::string& name,
                                const std::string& contents) const {
        auto p = file(name);
        std::ofstream out(p, std::ios::binary);
        out << contents;
        return p;
    }
};

} // namespace testsupport
