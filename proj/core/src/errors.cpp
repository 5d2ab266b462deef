#include "cwt/errors.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace cwt {

namespace {

std::mutex handler_mutex;

WarningHandler& handler_slot() {
    static WarningHandler handler = [](const std::string& msg) {
        std::cerr << "cwt: warning: " << msg << '\n';
    };
    return handler;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex);
    auto previous = std::move(handler_slot());
    handler_slot() = std::move(handler);
    return previous;
}

void warn(const std::string& message) {
    WarningHandler snapshot;
    {
        std::lock_guard lock(handler_mutex);
        snapshot = handler_slot();
    }
    if (snapshot) snapshot(message);
}

}  // namespace cwt
