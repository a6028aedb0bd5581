#pragma once

// On-disk cache of assembled matrices, one structured document per prime.
// A cached matrix is only returned after its symmetry checks pass again.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "modeq/equation.hpp"
#include "modeq/io.hpp"

namespace modeq {

class MatrixCache {
public:
    explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::filesystem::path path_for(std::int64_t p) const
    {
        return dir_ / ("A_" + std::to_string(p) + ".v" + std::to_string(schema_version) + ".json");
    }

    /// The cached matrix, or nothing if absent, unreadable or inconsistent.
    std::optional<ModularMatrix> load(std::int64_t p) const
    {
        std::ifstream in(path_for(p));
        if (!in) return std::nullopt;
        std::ostringstream text;
        text << in.rdbuf();
        try {
            ModularMatrix a = parse_structured(text.str());
            if (a.params.p != p || !verify_symmetry(a).passed()) return std::nullopt;
            return a;
        } catch (const FormatError&) {
            return std::nullopt;
        }
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// over the final name.
    void store(const ModularMatrix& a) const
    {
        std::filesystem::create_directories(dir_);
        const auto final_path = path_for(a.params.p);
        std::random_device rd;
        const auto tmp = dir_ / (final_path.filename().string() + ".tmp" + std::to_string(rd()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            write_structured(out, a);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("cannot install cache file " + final_path.string() + ": " + ec.message());
        }
    }

    ModularMatrix get_or_assemble(std::int64_t p) const
    {
        if (auto hit = load(p)) return *hit;
        ModularMatrix a = assemble(p);
        store(a);
        return a;
    }

private:
    std::filesystem::path dir_;
};

} // namespace modeq
