#include "reflinv/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reflinv/error.hpp"

namespace reflinv {

namespace {

using nlohmann::json;

struct Position {
    std::size_t line;
    std::size_t column;
};

Position position_of(const std::string &text, std::size_t offset)
{
    Position p{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Walks the source text in document order to find where each entry string
// starts, so entry errors can point at the file.
class EntryLocator {
public:
    explicit EntryLocator(const std::string &text) : text_(text) {}

    // Offset of the first character inside the quotes, or npos.
    std::size_t next(const std::string &entry)
    {
        const std::string quoted = json(entry).dump();
        const std::size_t at = text_.find(quoted, cursor_);
        if (at == std::string::npos) {
            return std::string::npos;
        }
        cursor_ = at + quoted.size();
        return at + 1;
    }

    std::size_t cursor() const noexcept { return cursor_; }

private:
    const std::string &text_;
    std::size_t cursor_ = 0;
};

[[noreturn]] void fail(const std::string &text, std::size_t offset, const std::string &message)
{
    if (offset == std::string::npos) {
        throw ParseError(message, 0, 0);
    }
    const Position p = position_of(text, offset);
    throw ParseError(message, p.line, p.column);
}

std::size_t key_offset(const std::string &text, const std::string &key)
{
    const std::size_t at = text.find("\"" + key + "\"");
    return at == std::string::npos ? 0 : at;
}

} // namespace

ReflectionGroup parse_group_json(const std::string &text, std::size_t max_order)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::string what = e.what();
        const auto colon = what.rfind(": ");
        fail(text, byte, "invalid JSON" + (colon == std::string::npos ? std::string() : what.substr(colon)));
    }
    if (!doc.is_object()) {
        fail(text, 0, "group definition must be a JSON object");
    }
    if (doc.contains("builtin")) {
        if (!doc["builtin"].is_string()) {
            fail(text, key_offset(text, "builtin"), "\"builtin\" must be a string");
        }
        try {
            return builtin(doc["builtin"].get<std::string>());
        } catch (const InvalidArgument &e) {
            fail(text, key_offset(text, "builtin"), e.what());
        }
    }

    std::string name = "group";
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            fail(text, key_offset(text, "name"), "\"name\" must be a string");
        }
        name = doc["name"].get<std::string>();
    }
    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() || doc["dimension"].get<long>() < 1) {
        fail(text, key_offset(text, "dimension"), "\"dimension\" must be a positive integer");
    }
    const std::size_t dim = doc["dimension"].get<std::size_t>();
    if (dim > 8) {
        fail(text, key_offset(text, "dimension"), "dimension above 8 is not supported");
    }
    unsigned order = 0;
    if (doc.contains("cyclotomic_order")) {
        const auto &m = doc["cyclotomic_order"];
        if (!m.is_number_unsigned() || m.get<long>() < 1 || m.get<unsigned long>() > cyclotomic_order_cap()) {
            fail(text, key_offset(text, "cyclotomic_order"), "\"cyclotomic_order\" must be a positive integer within the cap");
        }
        order = m.get<unsigned>();
    }
    if (!doc.contains("generators") || !doc["generators"].is_array()) {
        fail(text, key_offset(text, "generators"), "\"generators\" must be an array of matrices");
    }

    EntryLocator locate(text);
    std::vector<RMatrix> gens;
    const auto &list = doc["generators"];
    for (std::size_t g = 0; g < list.size(); ++g) {
        const auto &mat = list[g];
        const std::string where = "generator " + std::to_string(g + 1);
        if (!mat.is_array() || mat.size() != dim) {
            fail(text, locate.cursor(), where + " must have " + std::to_string(dim) + " rows");
        }
        RMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (!mat[r].is_array() || mat[r].size() != dim) {
                fail(text, locate.cursor(), where + " row " + std::to_string(r + 1) + " must have " +
                                                std::to_string(dim) + " entries");
            }
            for (std::size_t c = 0; c < dim; ++c) {
                const auto &entry = mat[r][c];
                const std::string cell = where + " entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
                if (entry.is_number_integer()) {
                    m(r, c) = Cyclotomic(entry.get<long>());
                    continue;
                }
                if (!entry.is_string()) {
                    fail(text, locate.cursor(), cell + " must be a string or an integer");
                }
                const std::string s = entry.get<std::string>();
                const std::size_t offset = locate.next(s);
                try {
                    m(r, c) = Cyclotomic::parse(s).minimized();
                } catch (const ParseError &e) {
                    fail(text, offset == std::string::npos ? offset : offset + e.column() - 1,
                         cell + ": " + e.bare_message());
                } catch (const Error &e) {
                    fail(text, offset, cell + ": " + e.what());
                }
                if (order != 0 && order % m(r, c).order() != 0) {
                    fail(text, offset, cell + " = " + m(r, c).to_string() + " does not lie in Q(E(" +
                                           std::to_string(order) + "))");
                }
            }
        }
        gens.push_back(std::move(m));
    }
    return closure(gens, max_order, name, dim);
}

ReflectionGroup load_group_file(const std::string &path, std::size_t max_order)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open group file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_group_json(ss.str(), max_order);
}

} // namespace reflinv
