#include <fstream>
#include <sstream>

#include "ioncav/cli.hpp"

namespace ioncav::cli {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool valid_name(const std::string& s)
{
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

}  // namespace

const IniEntry* IniSection::find(std::string_view key) const
{
    for (const IniEntry& e : entries) {
        if (e.key == key) return &e;
    }
    return nullptr;
}

void IniSection::set(const std::string& key, const std::string& value)
{
    for (IniEntry& e : entries) {
        if (e.key == key) {
            e.value = value;
            return;
        }
    }
    entries.push_back({key, value, 0});
}

const IniSection* IniDocument::find(std::string_view name) const
{
    for (const IniSection& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

IniSection& IniDocument::get_or_add(const std::string& name)
{
    for (IniSection& s : sections) {
        if (s.name == name) return s;
    }
    sections.push_back({name, 0, {}});
    return sections.back();
}

std::string IniDocument::to_text() const
{
    std::ostringstream os;
    bool first = true;
    for (const IniSection& s : sections) {
        if (!first) os << '\n';
        first = false;
        os << '[' << s.name << "]\n";
        for (const IniEntry& e : s.entries) os << e.key << " = " << e.value << '\n';
    }
    return os.str();
}

IniDocument parse_ini(std::string_view text)
{
    IniDocument doc;
    IniSection* current = nullptr;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line[0] == '[') {
            if (line.back() != ']') fail("unterminated section header '" + line + "'");
            const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
            if (!valid_name(name)) fail("bad section name '" + name + "'");
            if (doc.find(name)) fail("section [" + name + "] appears twice");
            doc.sections.push_back({name, line_no, {}});
            current = &doc.sections.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value', got '" + line + "'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!valid_name(key)) fail("bad key '" + key + "'");
        if (!current) fail("key '" + key + "' appears before any [section]");
        if (current->find(key)) fail("key '" + key + "' repeats in [" + current->name + "]");
        current->entries.push_back({key, std::move(value), line_no});
    }
    return doc;
}

IniDocument load_ini(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ini(ss.str());
}

}  // namespace ioncav::cli
