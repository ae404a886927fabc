"""
Dynamic Plugin Loader for graph families
Automatically discovers and loads family plugins from the plugins directory
"""
import importlib.util
import inspect
import sys
from pathlib import Path
from typing import Dict, List, Type

from core import console
from core.families.base_family import BaseFamily


class FamilyLoader:
    """Dynamically loads family plugins from the plugins directory"""

    def __init__(self, plugins_dir: str = "plugins"):
        self.plugins_dir = Path(plugins_dir)
        self.loaded_plugins: Dict[str, List[Type[BaseFamily]]] = {}
        self.plugin_errors: Dict[str, str] = {}

    def discover_plugins(self) -> List[str]:
        """Discover all Python files in the plugins directory"""
        console.debug(f"plugin directory: {self.plugins_dir.resolve()} (exists: {self.plugins_dir.exists()})")

        if not self.plugins_dir.exists():
            console.warn(f"Plugins directory not found: {self.plugins_dir}")
            return []

        plugin_files = []
        for file_path in sorted(self.plugins_dir.glob("*.py")):
            if file_path.name.startswith("_"):
                console.debug(f"  {file_path.name} -> skipped (starts with _)")
                continue  # Skip __init__.py and the template
            plugin_files.append(file_path.stem)
        console.debug(f"plugin list ({len(plugin_files)}): {plugin_files}")
        return plugin_files

    def load_plugin(self, plugin_name: str) -> List[Type[BaseFamily]]:
        """Load a single plugin file; returns every concrete family class it defines"""
        if plugin_name in self.loaded_plugins:
            return self.loaded_plugins[plugin_name]

        plugin_path = self.plugins_dir / f"{plugin_name}.py"
        if not plugin_path.exists():
            self.plugin_errors[plugin_name] = f"Plugin file not found: {plugin_path}"
            return []

        try:
            spec = importlib.util.spec_from_file_location(plugin_name, plugin_path)
            if spec is None or spec.loader is None:
                self.plugin_errors[plugin_name] = "Failed to create module spec"
                return []

            module = importlib.util.module_from_spec(spec)
            sys.modules[plugin_name] = module
            spec.loader.exec_module(module)

            families = [
                obj for _, obj in inspect.getmembers(module, inspect.isclass)
                if issubclass(obj, BaseFamily)
                and obj is not BaseFamily
                and obj.__module__ == module.__name__
                and not inspect.isabstract(obj)
            ]
            if not families:
                self.plugin_errors[plugin_name] = "No BaseFamily subclass found"
                return []

            self.loaded_plugins[plugin_name] = families
            console.debug(f"loaded plugin {plugin_name}: {', '.join(f.__name__ for f in families)}")
            return families

        except Exception as e:
            self.plugin_errors[plugin_name] = f"Error loading plugin: {e}"
            console.err(f"Failed to load plugin '{plugin_name}': {e}")
            return []

    def load_all_plugins(self) -> Dict[str, List[Type[BaseFamily]]]:
        """Discover and load all plugins"""
        plugin_names = self.discover_plugins()
        console.debug(f"discovered {len(plugin_names)} plugin(s) in {self.plugins_dir}")

        for plugin_name in plugin_names:
            self.load_plugin(plugin_name)

        if self.plugin_errors:
            console.warn(f"{len(self.plugin_errors)} plugin(s) failed to load")
            for name, error in self.plugin_errors.items():
                console.warn(f"  - {name}: {error}")

        return self.loaded_plugins
