"""
Run settings management.
"""

from typing import Any, Callable, Dict, List, Optional


class SettingProxy:
    """
    A single typed setting. Values are coerced to the setting's type on assignment.
    """

    def __init__(self, store: Dict[str, Any], key: str, type=str, default=None):
        self._store = store
        self._key = key
        self._type = type
        self._default = default
        self._listeners: List[Callable[[Any], None]] = []

    @property
    def key(self) -> str:
        return self._key

    @property
    def value(self) -> Any:
        return self._store.get(self._key, self._default)

    @value.setter
    def value(self, value: Any):
        if value is not None:
            value = self._type(value)
        self._store[self._key] = value
        for listener in self._listeners:
            listener(value)

    def connect(self, listener: Callable[[Any], None]):
        """
        Call `listener` with the new value whenever the setting changes.
        """
        self._listeners.append(listener)

    def reset(self):
        self._store.pop(self._key, None)


class SettingsManager:
    """
    Settings manager. Maintains a namespace of settings proxies.

    Example of an int-valued setting with a default:

    >>> settings = SettingsManager()
    >>> settings.min_repeats = ('period/min_repeats', int, 3)
    >>> settings.min_repeats.value  # returns 3
    >>> settings.min_repeats.value = '4'  # stored as 4
    """

    _instance: "SettingsManager" = None

    @classmethod
    def get_instance(cls) -> "SettingsManager":
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def __init__(self, store: Optional[Dict[str, Any]] = None):
        self._store = {} if store is None else store
        self._proxies: Dict[str, SettingProxy] = {}

    def __getattribute__(self, __name: str) -> Any:
        if __name in ("_store", "_proxies", "reset", "names"):
            return super().__getattribute__(__name)
        elif __name in self._proxies:
            return self._proxies[__name]
        else:
            raise AttributeError(f"No such setting: {__name}")

    def __setattr__(self, __name: str, __value: Any) -> None:
        if __name in ("_store", "_proxies"):
            super().__setattr__(__name, __value)
        elif isinstance(__value, SettingProxy):
            self._proxies[__name] = __value
        elif isinstance(__value, str):
            self._proxies[__name] = SettingProxy(self._store, __value)
        elif isinstance(__value, tuple):
            self._proxies[__name] = SettingProxy(self._store, __value[0], *__value[1:])
        else:
            raise TypeError(f"Cannot register setting {__name} from {__value!r}")

    def names(self) -> List[str]:
        return sorted(self._proxies)

    def reset(self):
        """
        Drop every stored value so all settings read their defaults again.
        """
        self._store.clear()
