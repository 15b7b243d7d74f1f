#include "talex/report.hpp"

#include <algorithm>
#include <sstream>

namespace talex {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const Json& node, const std::string& indent, std::ostream& os) {
    if (node.is_object()) {
        std::size_t width = 0;
        for (const auto& item : node.items())
            if (!item.value().is_structured()) width = std::max(width, item.key().size());
        for (const auto& item : node.items()) {
            if (item.value().is_structured()) {
                if (item.value().empty()) {
                    os << indent << item.key() << ": " << (item.value().is_array() ? "[]" : "{}")
                       << "\n";
                    continue;
                }
                os << indent << item.key() << ":\n";
                render(item.value(), indent + "  ", os);
            } else {
                os << indent << item.key() << ":"
                   << std::string(width - item.key().size() + 1, ' ')
                   << scalar_text(item.value()) << "\n";
            }
        }
        return;
    }
    if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& item : node) {
            if (item.is_structured()) {
                os << indent << "- [" << i << "]\n";
                render(item, indent + "  ", os);
            } else {
                os << indent << "- " << scalar_text(item) << "\n";
            }
            ++i;
        }
        return;
    }
    os << indent << scalar_text(node) << "\n";
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render(report, "", os);
    return os.str();
}

} // namespace talex
