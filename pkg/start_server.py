"""
Start the correlator JSON API (default port 5001, override with PORT).
"""
import os
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from web_app.app import app

if __name__ == '__main__':
    port = int(os.getenv('PORT', 5001))
    print("=" * 60)
    print("Jordan VOA Correlator API")
    print("=" * 60)
    print(f"\nStarting server on port {port}...")
    print(f"Status endpoint: http://localhost:{port}/api/status")
    print("\nPress Ctrl+C to stop the server")
    print("=" * 60)
    print()

    app.run(debug=False, host='0.0.0.0', port=port)
