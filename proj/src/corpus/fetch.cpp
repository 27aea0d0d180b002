#include "seatcast/corpus/fetch.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "seatcast/util/errors.hpp"

namespace seatcast {

namespace fs = std::filesystem;

namespace {

bool has_html_extension(const fs::path& p) {
    const std::string ext = p.extension().string();
    return ext == ".html" || ext == ".htm";
}

struct ParsedUrl {
    std::string scheme_host;  // "http://host:port"
    std::string path;
};

ParsedUrl split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) return {url, "/"};
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

class RateLimiter {
  public:
    explicit RateLimiter(double per_sec) {
        if (per_sec > 0) interval_ = std::chrono::duration<double>(1.0 / per_sec);
    }

    void wait() {
        if (interval_.count() <= 0) return;
        const auto now = std::chrono::steady_clock::now();
        if (last_.time_since_epoch().count() != 0 && now - last_ < interval_)
            std::this_thread::sleep_for(interval_ - (now - last_));
        last_ = std::chrono::steady_clock::now();
    }

  private:
    std::chrono::duration<double> interval_{0};
    std::chrono::steady_clock::time_point last_;
};

}  // namespace

bool extract_document(const OutletConfig& outlet, const std::string& url,
                      std::string_view page_html, RawDoc& doc, std::string& reason) {
    doc = RawDoc{};
    doc.url = url;

    const auto titles = html::select(page_html, outlet.title_selector);
    if (!titles.empty()) doc.title = titles.front();

    std::string body;
    for (const auto& part : html::select(page_html, outlet.body_selector)) {
        if (part.empty()) continue;
        if (!body.empty()) body += "\n";
        body += part;
    }
    doc.body = body;
    if (doc.body.empty()) {
        reason = kRejectEmptyBody;
        return false;
    }

    const auto dates = html::select(page_html, outlet.date_selector);
    if (dates.empty()) {
        reason = kRejectDateUnparseable;
        return false;
    }
    const auto ts = parse_timestamp(dates.front(), outlet.date_format);
    if (!ts) {
        reason = kRejectDateUnparseable;
        return false;
    }
    doc.published_at = *ts;
    return true;
}

FetchResult fetch_outlet(const OutletConfig& outlet, const TimeWindow& date_range) {
    FetchResult result;

    const auto take = [&](const std::string& url, std::string_view page) {
        RawDoc doc;
        std::string reason;
        if (!extract_document(outlet, url, page, doc, reason)) {
            result.rejects.push_back({url, reason});
            return;
        }
        if (!date_range.contains(doc.published_at)) {
            result.rejects.push_back({url, kRejectOutOfRange});
            return;
        }
        result.docs.push_back(std::move(doc));
    };

    if (outlet.source.rfind("local:", 0) == 0) {
        const fs::path dir = outlet.source.substr(6);
        if (!fs::is_directory(dir))
            throw ConfigError("outlet '" + outlet.outlet_id + "': not a directory: " +
                              dir.string());
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && has_html_extension(entry.path()))
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::ifstream in(file, std::ios::binary);
            if (!in) {
                result.rejects.push_back({"file://" + file.string(), kRejectFetchFailed});
                continue;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            take("file://" + file.string(), buf.str());
        }
        return result;
    }

    if (outlet.source.rfind("http://", 0) != 0 && outlet.source.rfind("https://", 0) != 0)
        throw ConfigError("outlet '" + outlet.outlet_id + "': source must be local:<dir> or http(s) URL");

    const ParsedUrl base = split_url(outlet.source);
    httplib::Client client(base.scheme_host);
    client.set_follow_location(true);
    RateLimiter limiter(outlet.rate_limit_per_sec);

    std::vector<std::string> paths = outlet.pages;
    if (!outlet.index.empty()) {
        limiter.wait();
        const auto res = client.Get(outlet.index);
        if (!res || res->status != 200) {
            result.rejects.push_back({base.scheme_host + outlet.index, kRejectFetchFailed});
        } else {
            for (const auto& href : html::extract_links(res->body)) {
                if (!outlet.link_pattern.empty() &&
                    href.find(outlet.link_pattern) == std::string::npos)
                    continue;
                paths.push_back(href);
            }
        }
    }
    // De-duplicate while keeping first-seen order.
    std::vector<std::string> seen;
    for (const auto& path : paths) {
        if (std::find(seen.begin(), seen.end(), path) != seen.end()) continue;
        seen.push_back(path);
        limiter.wait();
        const auto res = client.Get(path);
        if (!res || res->status != 200) {
            result.rejects.push_back({base.scheme_host + path, kRejectFetchFailed});
            continue;
        }
        take(base.scheme_host + path, res->body);
    }
    return result;
}

}  // namespace seatcast
