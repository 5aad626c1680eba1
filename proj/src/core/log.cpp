#include "epifuse/core/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <string>

namespace epifuse::log {

namespace {

Level parse_level(const char* s)
{
    if (s == nullptr) return Level::warn;
    const std::string v(s);
    if (v == "debug") return Level::debug;
    if (v == "info") return Level::info;
    if (v == "warn") return Level::warn;
    if (v == "error") return Level::error;
    if (v == "off") return Level::off;
    return Level::warn;
}

const char* tag(Level lvl)
{
    switch (lvl) {
        case Level::debug: return "debug";
        case Level::info: return "info";
        case Level::warn: return "warn";
        case Level::error: return "error";
        default: return "?";
    }
}

std::mutex& sink_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

Level level()
{
    static const Level lvl = parse_level(std::getenv("EPIFUSE_LOG"));
    return lvl;
}

void write(Level lvl, const std::string& msg)
{
    if (lvl < level()) return;
    std::lock_guard<std::mutex> lock(sink_mutex());
    std::fprintf(stderr, "[epifuse %s] %s\n", tag(lvl), msg.c_str());
}

} // namespace epifuse::log
