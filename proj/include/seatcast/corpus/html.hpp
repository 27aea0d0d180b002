#ifndef SEATCAST_CORPUS_HTML_HPP
#define SEATCAST_CORPUS_HTML_HPP

#include <string>
#include <string_view>
#include <vector>

// Lenient HTML scanner used for article extraction. Understands enough of
// real-world news markup to pull element text by simple selectors:
//
//   tag            div, h1, time, ...
//   #id            any tag with id="..."
//   .class         any tag carrying the class
//   tag.class, tag#id
//   tag[attr=value]
//   <selector>@attr   -> the attribute value instead of the inner text
//
// Comments, CDATA, script/style/noscript/template/svg contents are skipped.
// nav/header/footer/aside/form subtrees never contribute text.

namespace seatcast::html {

struct Selector {
    std::string tag;
    std::string id;
    std::string cls;
    std::string attr_key;
    std::string attr_value;
    std::string capture_attr;  // from the "@attr" suffix; empty = inner text

    // Throws ConfigError on syntax it does not understand.
    static Selector parse(std::string_view spec);
};

// Inner text (whitespace-normalized) of every element matching the
// selector, in document order. With capture_attr set, the attribute value
// of every matching element instead.
std::vector<std::string> select(std::string_view html, const Selector& selector);

// Visible text of the whole document, boilerplate subtrees excluded.
std::string extract_text(std::string_view html);

// href attribute of every <a> element.
std::vector<std::string> extract_links(std::string_view html);

// Named and numeric character references; unknown ones pass through.
std::string decode_entities(std::string_view s);

}  // namespace seatcast::html

#endif
