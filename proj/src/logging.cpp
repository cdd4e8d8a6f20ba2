#include "clscnd/logging.hpp"

#include <cstdlib>
#include <iostream>

namespace clscnd::log {

Level threshold() {
    static const Level cached = [] {
        const char* env = std::getenv("CLSCND_LOG");
        if (!env) return Level::Warn;
        const std::string v(env);
        if (v == "debug") return Level::Debug;
        if (v == "info") return Level::Info;
        if (v == "warn") return Level::Warn;
        if (v == "off") return Level::Off;
        return Level::Warn;
    }();
    return cached;
}

void message(Level level, const std::string& text) {
    if (level < threshold()) return;
    const char* tag = level == Level::Debug ? "debug" : (level == Level::Info ? "info" : "warn");
    std::cerr << "[clscnd] " << tag << ": " << text << '\n';
}

}  // namespace clscnd::log
