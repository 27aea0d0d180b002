#include "seatcast/corpus/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "seatcast/util/errors.hpp"
#include "seatcast/util/utf8.hpp"

namespace seatcast::html {

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_void_tag(const std::string& tag) {
    static constexpr std::array<std::string_view, 14> kVoid = {
        "area", "base", "br",    "col",   "embed",  "hr",  "img",
        "input", "link", "meta", "param", "source", "track", "wbr"};
    return std::find(kVoid.begin(), kVoid.end(), tag) != kVoid.end();
}

bool is_raw_text_tag(const std::string& tag) {
    return tag == "script" || tag == "style" || tag == "noscript" || tag == "template" ||
           tag == "svg";
}

bool is_boilerplate_tag(const std::string& tag) {
    return tag == "nav" || tag == "header" || tag == "footer" || tag == "aside" || tag == "form";
}

bool is_block_tag(const std::string& tag) {
    static constexpr std::array<std::string_view, 20> kBlock = {
        "p",  "div", "br",  "li",    "ul",    "ol",      "h1",    "h2",      "h3", "h4",
        "h5", "h6",  "tr",  "td",    "table", "section", "article", "blockquote", "figcaption", "hr"};
    return std::find(kBlock.begin(), kBlock.end(), tag) != kBlock.end();
}

struct Attr {
    std::string name;
    std::string value;
};

struct Tag {
    std::string name;
    std::vector<Attr> attrs;
    bool closing = false;
    bool self_closing = false;

    std::string attr(const std::string& key) const {
        for (const auto& a : attrs) {
            if (a.name == key) return a.value;
        }
        return {};
    }
};

// Parses the tag starting at s[i] == '<'; advances i past the '>'.
bool parse_tag(std::string_view s, std::size_t& i, Tag& tag) {
    std::size_t p = i + 1;
    tag = Tag{};
    if (p < s.size() && s[p] == '/') {
        tag.closing = true;
        ++p;
    }
    std::size_t name_start = p;
    while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) != 0 || s[p] == '-')) ++p;
    if (p == name_start) return false;
    tag.name = ascii_lower(s.substr(name_start, p - name_start));

    while (p < s.size() && s[p] != '>') {
        if (std::isspace(static_cast<unsigned char>(s[p])) != 0 || s[p] == '/') {
            if (s[p] == '/' && p + 1 < s.size() && s[p + 1] == '>') tag.self_closing = true;
            ++p;
            continue;
        }
        std::size_t attr_start = p;
        while (p < s.size() && s[p] != '=' && s[p] != '>' && s[p] != '/' &&
               std::isspace(static_cast<unsigned char>(s[p])) == 0)
            ++p;
        Attr attr;
        attr.name = ascii_lower(s.substr(attr_start, p - attr_start));
        if (p < s.size() && s[p] == '=') {
            ++p;
            while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p])) != 0) ++p;
            if (p < s.size() && (s[p] == '"' || s[p] == '\'')) {
                const char quote = s[p];
                ++p;
                std::size_t val_start = p;
                while (p < s.size() && s[p] != quote) ++p;
                attr.value = std::string(s.substr(val_start, p - val_start));
                if (p < s.size()) ++p;
            } else {
                std::size_t val_start = p;
                while (p < s.size() && s[p] != '>' &&
                       std::isspace(static_cast<unsigned char>(s[p])) == 0)
                    ++p;
                attr.value = std::string(s.substr(val_start, p - val_start));
            }
        }
        if (!attr.name.empty()) tag.attrs.push_back(std::move(attr));
    }
    if (p >= s.size()) return false;
    i = p + 1;
    return true;
}

bool has_class(const Tag& tag, const std::string& cls) {
    const std::string classes = tag.attr("class");
    std::size_t pos = 0;
    while (pos < classes.size()) {
        while (pos < classes.size() && std::isspace(static_cast<unsigned char>(classes[pos])) != 0)
            ++pos;
        std::size_t end = pos;
        while (end < classes.size() && std::isspace(static_cast<unsigned char>(classes[end])) == 0)
            ++end;
        if (classes.substr(pos, end - pos) == cls) return true;
        pos = end;
    }
    return false;
}

bool matches(const Tag& tag, const Selector& sel) {
    if (!sel.tag.empty() && tag.name != sel.tag) return false;
    if (!sel.id.empty() && tag.attr("id") != sel.id) return false;
    if (!sel.cls.empty() && !has_class(tag, sel.cls)) return false;
    if (!sel.attr_key.empty() && tag.attr(sel.attr_key) != sel.attr_value) return false;
    return true;
}

void append_normalized(std::string& out, std::string_view text) {
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            if (!out.empty() && out.back() != ' ') out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
}

struct Capture {
    std::size_t depth = 0;  // stack depth at which the match opened
    std::string text;
    std::string attr_value;
};

// One walk serves select(), extract_text() and extract_links().
struct Walker {
    const Selector* selector = nullptr;
    std::vector<std::string>* out = nullptr;
    std::string* whole_text = nullptr;
    std::vector<std::string>* links = nullptr;

    void run(std::string_view s) {
        std::vector<std::string> stack;
        std::size_t skip_depth = 0;  // >0 while inside a boilerplate subtree
        std::vector<Capture> captures;
        std::size_t i = 0;
        std::string raw_until;  // close tag that ends a raw-text element

        const auto text_sink = [&](std::string_view chunk) {
            if (skip_depth > 0) return;
            const std::string decoded = decode_entities(chunk);
            for (auto& cap : captures) append_normalized(cap.text, decoded);
            if (whole_text != nullptr) append_normalized(*whole_text, decoded);
        };

        while (i < s.size()) {
            if (!raw_until.empty()) {
                // Inside script/style etc.: scan for the closing tag only.
                const std::size_t pos = s.find('<', i);
                if (pos == std::string_view::npos) break;
                std::size_t j = pos;
                Tag tag;
                if (parse_tag(s, j, tag) && tag.closing && tag.name == raw_until) {
                    raw_until.clear();
                    if (!stack.empty()) stack.pop_back();
                    i = j;
                } else {
                    i = pos + 1;
                }
                continue;
            }

            if (s[i] == '<') {
                if (s.compare(i, 4, "<!--") == 0) {
                    const auto end = s.find("-->", i + 4);
                    i = end == std::string_view::npos ? s.size() : end + 3;
                    continue;
                }
                if (s.compare(i, 9, "<![CDATA[") == 0) {
                    const auto end = s.find("]]>", i + 9);
                    i = end == std::string_view::npos ? s.size() : end + 3;
                    continue;
                }
                if (i + 1 < s.size() && (s[i + 1] == '!' || s[i + 1] == '?')) {
                    const auto end = s.find('>', i + 1);
                    i = end == std::string_view::npos ? s.size() : end + 1;
                    continue;
                }
                Tag tag;
                std::size_t j = i;
                if (!parse_tag(s, j, tag)) {
                    text_sink(s.substr(i, 1));
                    ++i;
                    continue;
                }
                i = j;

                if (tag.closing) {
                    // Lenient close: pop to the matching open tag if present.
                    const auto it = std::find(stack.rbegin(), stack.rend(), tag.name);
                    if (it != stack.rend()) {
                        const auto keep = static_cast<std::size_t>(stack.rend() - it) - 1;
                        while (stack.size() > keep) {
                            close_one(stack, skip_depth, captures);
                        }
                    }
                    continue;
                }

                if (is_block_tag(tag.name)) text_sink(" ");

                if (links != nullptr && tag.name == "a" && skip_depth == 0) {
                    const std::string href = tag.attr("href");
                    if (!href.empty()) links->push_back(decode_entities(href));
                }

                const bool opens_scope = !tag.self_closing && !is_void_tag(tag.name);
                if (selector != nullptr && skip_depth == 0 && matches(tag, *selector)) {
                    if (!selector->capture_attr.empty()) {
                        out->push_back(decode_entities(tag.attr(selector->capture_attr)));
                    } else if (opens_scope) {
                        captures.push_back({stack.size(), {}, {}});
                    } else {
                        out->push_back({});
                    }
                }
                if (!opens_scope) continue;

                stack.push_back(tag.name);
                if (is_boilerplate_tag(tag.name)) ++skip_depth;
                if (is_raw_text_tag(tag.name)) raw_until = tag.name;
                continue;
            }

            const std::size_t next = s.find('<', i);
            const std::size_t end = next == std::string_view::npos ? s.size() : next;
            text_sink(s.substr(i, end - i));
            i = end;
        }
        while (!stack.empty()) close_one(stack, skip_depth, captures);
    }

  private:
    void close_one(std::vector<std::string>& stack, std::size_t& skip_depth,
                   std::vector<Capture>& captures) {
        const std::string tag = stack.back();
        stack.pop_back();
        if (is_boilerplate_tag(tag) && skip_depth > 0) --skip_depth;
        while (!captures.empty() && captures.back().depth == stack.size()) {
            std::string text = captures.back().text;
            captures.pop_back();
            while (!text.empty() && text.back() == ' ') text.pop_back();
            std::size_t b = 0;
            while (b < text.size() && text[b] == ' ') ++b;
            out->push_back(text.substr(b));
        }
    }
};

const std::map<std::string, std::string, std::less<>>& entity_table() {
    static const std::map<std::string, std::string, std::less<>> kTable = {
        {"amp", "&"},    {"lt", "<"},     {"gt", ">"},      {"quot", "\""},
        {"apos", "'"},   {"nbsp", " "},   {"eacute", "é"},  {"egrave", "è"},
        {"ecirc", "ê"},  {"agrave", "à"}, {"acirc", "â"},   {"ccedil", "ç"},
        {"ocirc", "ô"},  {"ucirc", "û"},  {"ugrave", "ù"},  {"icirc", "î"},
        {"iuml", "ï"},   {"euml", "ë"},   {"oelig", "œ"},   {"laquo", "«"},
        {"raquo", "»"},  {"hellip", "…"}, {"rsquo", "’"},   {"lsquo", "‘"},
        {"ndash", "–"},  {"mdash", "—"},  {"deg", "°"},     {"euro", "€"},
    };
    return kTable;
}

}  // namespace

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i]);
            ++i;
            continue;
        }
        const std::size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back('&');
            ++i;
            continue;
        }
        const std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            char32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (std::size_t k = 2; k < body.size() && ok; ++k) {
                    const char c = body[k];
                    if (std::isxdigit(static_cast<unsigned char>(c)) == 0) ok = false;
                    else
                        cp = cp * 16 + static_cast<char32_t>(
                                           std::isdigit(static_cast<unsigned char>(c)) != 0
                                               ? c - '0'
                                               : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
                }
            } else {
                for (std::size_t k = 1; k < body.size() && ok; ++k) {
                    if (std::isdigit(static_cast<unsigned char>(body[k])) == 0) ok = false;
                    else cp = cp * 10 + static_cast<char32_t>(body[k] - '0');
                }
            }
            if (ok && cp > 0 && cp <= 0x10FFFF) {
                utf8::append(out, cp);
                i = semi + 1;
                continue;
            }
        } else if (const auto it = entity_table().find(body); it != entity_table().end()) {
            out += it->second;
            i = semi + 1;
            continue;
        }
        out.push_back('&');
        ++i;
    }
    return out;
}

Selector Selector::parse(std::string_view spec) {
    Selector sel;
    std::string_view rest = spec;
    if (const auto at = rest.rfind('@'); at != std::string_view::npos) {
        sel.capture_attr = ascii_lower(rest.substr(at + 1));
        rest = rest.substr(0, at);
    }
    if (const auto br = rest.find('['); br != std::string_view::npos) {
        const auto close = rest.find(']', br);
        const auto eq = rest.find('=', br);
        if (close == std::string_view::npos || eq == std::string_view::npos || eq > close)
            throw ConfigError("bad selector attribute filter: " + std::string(spec));
        sel.attr_key = ascii_lower(rest.substr(br + 1, eq - br - 1));
        sel.attr_value = std::string(rest.substr(eq + 1, close - eq - 1));
        rest = rest.substr(0, br);
    }
    if (const auto hash = rest.find('#'); hash != std::string_view::npos) {
        sel.id = std::string(rest.substr(hash + 1));
        rest = rest.substr(0, hash);
    } else if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
        sel.cls = std::string(rest.substr(dot + 1));
        rest = rest.substr(0, dot);
    }
    sel.tag = ascii_lower(rest);
    if (sel.tag.empty() && sel.id.empty() && sel.cls.empty() && sel.attr_key.empty())
        throw ConfigError("empty selector: " + std::string(spec));
    return sel;
}

std::vector<std::string> select(std::string_view html, const Selector& selector) {
    std::vector<std::string> out;
    Walker w;
    w.selector = &selector;
    w.out = &out;
    w.run(html);
    return out;
}

std::string extract_text(std::string_view html) {
    std::string text;
    Walker w;
    w.whole_text = &text;
    w.run(html);
    while (!text.empty() && text.back() == ' ') text.pop_back();
    std::size_t b = 0;
    while (b < text.size() && text[b] == ' ') ++b;
    return text.substr(b);
}

std::vector<std::string> extract_links(std::string_view html) {
    std::vector<std::string> links;
    Walker w;
    w.links = &links;
    w.run(html);
    return links;
}

}  // namespace seatcast::html
