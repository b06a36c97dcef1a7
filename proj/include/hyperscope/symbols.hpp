// Copyright 2026 hyperscope contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef HYPERSCOPE_SYMBOLS_HPP
#define HYPERSCOPE_SYMBOLS_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperscope {

/// Interned variable identifier. Symbols are process-global and append-only;
/// the id doubles as the canonical variable ordering used by monomials.
class Symbol {
public:
    Symbol() : id_(-1) {}

    static Symbol intern(const std::string& name) { return Symbol(registry().intern(name, false)); }

    /// Interns a symbol that squares to -1 (used for the Wilson argument).
    static Symbol intern_imaginary(const std::string& name) {
        return Symbol(registry().intern(name, true));
    }

    static bool exists(const std::string& name) { return registry().lookup(name) >= 0; }

    int id() const { return id_; }
    bool valid() const { return id_ >= 0; }
    const std::string& name() const { return registry().name(id_); }
    bool imaginary() const { return registry().imaginary(id_); }

    bool operator==(const Symbol& o) const { return id_ == o.id_; }
    bool operator!=(const Symbol& o) const { return id_ != o.id_; }
    bool operator<(const Symbol& o) const { return id_ < o.id_; }

    static bool any_imaginary_registered() { return registry().any_imaginary_; }
    static bool is_imaginary_id(int id) { return registry().imaginary(id); }
    static const std::string& name_of(int id) { return registry().name(id); }

private:
    explicit Symbol(int id) : id_(id) {}

    struct Registry {
        std::vector<std::string> names;
        std::vector<bool> imag;
        std::unordered_map<std::string, int> index;
        bool any_imaginary_ = false;
        mutable std::mutex mu;

        int intern(const std::string& name, bool imaginary_flag) {
            std::lock_guard<std::mutex> lock(mu);
            auto it = index.find(name);
            if (it != index.end()) {
                if (imaginary_flag && !imag[it->second]) {
                    imag[it->second] = true;
                    any_imaginary_ = true;
                }
                return it->second;
            }
            int id = static_cast<int>(names.size());
            names.push_back(name);
            imag.push_back(imaginary_flag);
            if (imaginary_flag) any_imaginary_ = true;
            index.emplace(name, id);
            return id;
        }

        int lookup(const std::string& name) const {
            std::lock_guard<std::mutex> lock(mu);
            auto it = index.find(name);
            return it == index.end() ? -1 : it->second;
        }

        const std::string& name(int id) const {
            std::lock_guard<std::mutex> lock(mu);
            if (id < 0 || id >= static_cast<int>(names.size()))
                throw std::out_of_range("symbol id out of range");
            return names[id];
        }

        bool imaginary(int id) const {
            std::lock_guard<std::mutex> lock(mu);
            return id >= 0 && id < static_cast<int>(imag.size()) && imag[id];
        }
    };

    static Registry& registry() {
        static Registry r;
        return r;
    }

    int id_;
};

}  // namespace hyperscope

#endif  // HYPERSCOPE_SYMBOLS_HPP
